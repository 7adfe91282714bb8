#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rombond/bondage.hpp"
#include "rombond/formulas.hpp"
#include "rombond/roman.hpp"

using namespace rombond;

namespace {

Graph c5() {
  return Graph::from_edges(
      5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)});
}

Graph tpartite(std::vector<int> parts) {
  return gen_tpartite(PartiteSpec::of(std::move(parts))).graph;
}

void require_error(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    FAIL_CHECK("expected error " << error_kind_name(kind));
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("bondage_roman stated values") {
  Graph p3 = tpartite({1, 2});
  CHECK(bondage_roman(p3).value == 1);
  CHECK(bondage_roman(tpartite({1, 1, 1})).value == 2);

  BondageResult res = bondage_roman(c5());
  CHECK(res.value == 3);
  CHECK(res.witness == EdgeSet{Edge(0, 1), Edge(0, 4), Edge(2, 3)});
  CHECK(res.base == 4);
  CHECK(res.raised == 5);
  CHECK(res.subsets_tested == 17);

  CHECK(bondage_roman(tpartite({3, 3})).value == 4);

  require_error(ErrorKind::no_bondage_set,
                [] { bondage_roman(tpartite({1, 1})); });  // K2
  require_error(ErrorKind::empty_graph,
                [] { bondage_roman(Graph::from_edges(3, {})); });
}

TEST_CASE("bondage_classical stated values") {
  CHECK(bondage_classical(tpartite({1, 1, 1})).value == 2);
  CHECK(bondage_classical(tpartite({1, 2})).value == 1);
  require_error(ErrorKind::empty_graph,
                [] { bondage_classical(Graph::from_edges(3, {})); });
}

TEST_CASE("budget") {
  BondageOptions tight;
  tight.budget = 2;
  require_error(ErrorKind::budget_exhausted,
                [&] { bondage_roman(c5(), tight); });
  BondageOptions enough;
  enough.budget = 3;
  CHECK(bondage_roman(c5(), enough).value == 3);
}

TEST_CASE("no bondage set exactly when gamma_R equals the order") {
  // the spec-side derivation: gamma_R(G) = n <=> max degree <= 1,
  // brute-checked over all labeled graphs to n = 6
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      CHECK((gamma_roman(g).value == n) == (g.max_degree() <= 1));
    });

  // and bondage_roman reports it as an error on nonempty such graphs
  Graph two_k2 =
      Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)});
  require_error(ErrorKind::no_bondage_set, [&] { bondage_roman(two_k2); });
  Graph k2_plus_iso = Graph::from_edges(3, {Edge(0, 1)});
  require_error(ErrorKind::no_bondage_set,
                [&] { bondage_roman(k2_plus_iso); });
}

TEST_CASE("ascending-k search matches unpruned enumeration") {
  SUBCASE("exhaustive to n = 4") {
    for (int n = 2; n <= 4; ++n)
      for_each_labeled_graph(n, [&](const Graph& g) {
        if (g.edge_count() == 0) return;
        auto brute = testoracle::bondage_roman_brute(g);
        if (!brute) {
          require_error(ErrorKind::no_bondage_set, [&] { bondage_roman(g); });
          return;
        }
        BondageResult res = bondage_roman(g);
        CHECK(res.value == brute->value);
        CHECK(res.witness == brute->witness);
        CHECK(res.raised > res.base);
      });
  }
  SUBCASE("random samples at n = 5..7") {
    std::mt19937_64 rng(71);
    for (int n = 5; n <= 7; ++n) {
      int done = 0;
      while (done < 25) {
        Graph g = random_graph(n, rng);
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        ++done;
        auto brute = testoracle::bondage_roman_brute(g);
        if (!brute) {
          require_error(ErrorKind::no_bondage_set, [&] { bondage_roman(g); });
          continue;
        }
        BondageResult res = bondage_roman(g);
        CHECK(res.value == brute->value);
        CHECK(res.witness == brute->witness);
      }
    }
  }
  SUBCASE("classical solver, exhaustive to n = 4") {
    for (int n = 2; n <= 4; ++n)
      for_each_labeled_graph(n, [&](const Graph& g) {
        if (g.edge_count() == 0) return;
        auto brute = testoracle::bondage_classical_brute(g);
        REQUIRE(brute.has_value());  // gamma < n whenever an edge exists
        BondageResult res = bondage_classical(g);
        CHECK(res.value == brute->value);
        CHECK(res.witness == brute->witness);
      });
  }
}

TEST_CASE("removal monotonicity along random chains") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng);
    EdgeSet all = g.edges();
    if (all.size() < 2) continue;
    std::size_t small = rng() % all.size();
    std::size_t big = small + rng() % (all.size() - small);
    EdgeSet b1(all.begin(), all.begin() + small);
    EdgeSet b2(all.begin(), all.begin() + big + 1);
    CHECK(gamma_roman(g.remove_edges(b1)).value <=
          gamma_roman(g.remove_edges(b2)).value);
  }
}

TEST_CASE("constructed witnesses") {
  SUBCASE("stated shapes") {
    EdgeSet b34 = construct_bondage_witness(PartiteSpec::of({3, 4}));
    CHECK(b34 == EdgeSet{Edge(0, 3), Edge(1, 3), Edge(2, 3)});

    EdgeSet b22 = construct_bondage_witness(PartiteSpec::of({2, 2}));
    CHECK(b22.size() == 2);  // a perfect matching of the 4-cycle
    CHECK(b22 == EdgeSet{Edge(0, 2), Edge(1, 3)});

    EdgeSet bco7 = construct_bondage_witness(CoCycleSpec::of({7}));
    CHECK(bco7.size() == 5);  // E(x0) plus the edge between x0's non-neighbors
    Graph g = gen_co_cycles(CoCycleSpec::of({7}));
    CHECK(gamma_roman(g.remove_edges(bco7)).value > gamma_roman(g).value);
  }
  SUBCASE("sizes match the closed forms across the sweep") {
    for (const PartiteSpec& spec : enum_tpartite_specs(10)) {
      if (spec.n() < 3) continue;
      EdgeSet b = construct_bondage_witness(spec);
      CHECK(static_cast<int>(b.size()) == b_roman_tpartite(spec).value);
    }
    for (int n = 5; n <= 10; ++n)
      for (const CoCycleSpec& spec : enum_n_minus_3_regular(n)) {
        EdgeSet b = construct_bondage_witness(spec);
        CHECK(static_cast<int>(b.size()) ==
              b_roman_n_minus_3_regular(spec).value);
      }
  }
  SUBCASE("unsupported families") {
    require_error(ErrorKind::unsupported_family, [] {
      construct_bondage_witness(PartiteSpec::of({1, 1}));
    });
    require_error(ErrorKind::unsupported_family, [] {
      construct_bondage_witness(CoCycleSpec::of({3}));
    });
    require_error(ErrorKind::unsupported_family, [] {
      construct_bondage_witness(CoCycleSpec::of({4}));
    });
  }
}

TEST_CASE("cover pruning is gated and result-preserving") {
  BondageOptions pruned;
  pruned.prune_regular = true;

  require_error(ErrorKind::invalid_spec, [&] {
    bondage_roman(tpartite({1, 2}), pruned);  // not (n-3)-regular
  });
  require_error(ErrorKind::invalid_spec, [&] {
    bondage_classical(gen_co_cycles(CoCycleSpec::of({6})), pruned);
  });

  for (int n = 5; n <= 8; ++n)
    for (const CoCycleSpec& spec : enum_n_minus_3_regular(n)) {
      Graph g = gen_co_cycles(spec);
      BondageResult plain = bondage_roman(g);
      BondageResult fast = bondage_roman(g, pruned);
      CHECK(plain.value == fast.value);
      CHECK(plain.witness == fast.witness);
    }
}

TEST_CASE("minimum bondage set enumeration") {
  Graph g = c5();
  BondageResult res = bondage_roman(g);
  BondageEnumeration en = enumerate_roman_bondage_sets(g, res.value, 100);
  CHECK_FALSE(en.truncated);
  CHECK(en.sets.size() == 5);
  CHECK(en.sets.front() == res.witness);
  int base = res.base;
  for (const EdgeSet& b : en.sets) {
    CHECK(gamma_roman(g.remove_edges(b)).value > base);
    // every minimum bondage set of an (n-3)-regular graph covers V
    VertexSet touched = 0;
    for (const Edge& e : b) touched |= vertex_bit(e.u) | vertex_bit(e.v);
    CHECK(touched == g.vertices());
  }

  BondageEnumeration capped = enumerate_roman_bondage_sets(g, res.value, 2);
  CHECK(capped.truncated);
  CHECK(capped.sets.size() == 2);
  CHECK(capped.sets == std::vector<EdgeSet>(en.sets.begin(),
                                            en.sets.begin() + 2));
}
