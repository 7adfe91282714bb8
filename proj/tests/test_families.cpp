#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "doctest.h"
#include "rombond/families.hpp"
#include "rombond/graph.hpp"

using namespace rombond;

namespace {

// Labeled graphs on n vertices where every vertex has the given degree,
// enumerated by a row-by-row DFS with degree-feasibility pruning. Visits
// exactly the regular graphs, each once.
void for_each_labeled_regular(int n, int degree,
                              const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> acc;
  std::vector<int> deg(n, 0);
  // decide edges (u,v) in lex order
  std::function<void(int, int)> rec = [&](int u, int v) {
    if (u == n - 1) {
      bool ok = true;
      for (int w = 0; w < n; ++w)
        if (deg[w] != degree) ok = false;
      if (ok) fn(Graph::from_edges(n, acc));
      return;
    }
    if (v == n) {
      if (deg[u] != degree) return;  // u's row is final
      rec(u + 1, u + 2);
      return;
    }
    // remaining slots for u must suffice
    if (deg[u] + (n - v) >= degree) rec(u, v + 1);
    if (deg[u] < degree && deg[v] < degree) {
      acc.push_back(Edge(u, v));
      ++deg[u];
      ++deg[v];
      rec(u, v + 1);
      --deg[u];
      --deg[v];
      acc.pop_back();
    }
  };
  if (n == 1) {
    if (degree == 0) fn(Graph::from_edges(1, {}));
    return;
  }
  rec(0, 1);
}

int partitions_with_min(int n, int lo) {
  if (n == 0) return 1;
  int total = 0;
  for (int p = lo; p <= n; ++p) total += partitions_with_min(n - p, p);
  return total;
}

}  // namespace

TEST_CASE("gen_tpartite examples") {
  TPartiteGraph k3 = gen_tpartite(PartiteSpec::of({1, 1, 1}));
  CHECK(k3.graph == Graph::from_edges(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)}));

  Graph k33 = gen_tpartite(PartiteSpec::of({3, 3})).graph;
  CHECK(k33.order() == 6);
  CHECK(k33.edge_count() == 9);
  for (int v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);

  Graph k23 = gen_tpartite(PartiteSpec::of({2, 3})).graph;
  CHECK(k23.edge_count() == 6);
  std::vector<int> degs;
  for (int v = 0; v < 5; ++v) degs.push_back(k23.degree(v));
  std::sort(degs.begin(), degs.end(), std::greater<>());
  CHECK(degs == std::vector<int>{3, 3, 2, 2, 2});
}

TEST_CASE("spec validation and normalization") {
  CHECK_THROWS_AS((void)PartiteSpec::of({3}), Error);
  CHECK_THROWS_AS((void)PartiteSpec::of({0, 2}), Error);
  CHECK_THROWS_AS((void)CoCycleSpec::of({2, 3}), Error);
  CHECK_THROWS_AS((void)CoCycleSpec::of({}), Error);

  PartiteSpec s = PartiteSpec::of({4, 1, 3, 1});
  CHECK(s.parts == std::vector<int>{1, 1, 3, 4});
  CHECK(s.min_part_count() == 2);
  CHECK(s.label() == "1,1,3,4");
  CHECK(CoCycleSpec::of({6, 3}).label() == "co:3,6");
}

TEST_CASE("tpartite structure invariants over the sweep") {
  for (const PartiteSpec& spec : enum_tpartite_specs(10)) {
    TPartiteGraph tg = gen_tpartite(spec);
    int n = spec.n();
    int sq = 0;
    for (int p : spec.parts) sq += p * p;
    CHECK(tg.graph.edge_count() == (n * n - sq) / 2);
    for (std::size_t j = 0; j < tg.parts.size(); ++j)
      for (int v : set_vertices(tg.parts[j]))
        CHECK(tg.graph.degree(v) == n - spec.parts[j]);
  }
}

TEST_CASE("gen_co_cycles examples") {
  // co:5 is again a 5-cycle
  Graph co5 = gen_co_cycles(CoCycleSpec::of({5}));
  for (int v = 0; v < 5; ++v) CHECK(co5.degree(v) == 2);
  CHECK(components(co5).size() == 1);

  // co:3,3 reproduces K_{3,3} including labels
  CHECK(gen_co_cycles(CoCycleSpec::of({3, 3})) ==
        gen_tpartite(PartiteSpec::of({3, 3})).graph);

  // co:6 is the prism: 3-regular with exactly two triangles
  Graph prism = gen_co_cycles(CoCycleSpec::of({6}));
  for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);
  int triangles = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (prism.has_edge(a, b) && prism.has_edge(a, c) &&
            prism.has_edge(b, c))
          ++triangles;
  CHECK(triangles == 2);
}

TEST_CASE("co-cycle graphs are (n-3)-regular") {
  for (int n = 3; n <= 10; ++n)
    for (const CoCycleSpec& spec : enum_n_minus_3_regular(n)) {
      Graph g = gen_co_cycles(spec);
      for (int v = 0; v < n; ++v) CHECK(g.degree(v) == n - 3);
    }
}

TEST_CASE("enum_n_minus_3_regular") {
  CHECK(enum_n_minus_3_regular(5) ==
        std::vector<CoCycleSpec>{CoCycleSpec::of({5})});
  CHECK(enum_n_minus_3_regular(6) ==
        std::vector<CoCycleSpec>{CoCycleSpec::of({3, 3}), CoCycleSpec::of({6})});
  CHECK(enum_n_minus_3_regular(9) ==
        std::vector<CoCycleSpec>{CoCycleSpec::of({3, 3, 3}),
                                 CoCycleSpec::of({3, 6}),
                                 CoCycleSpec::of({4, 5}),
                                 CoCycleSpec::of({9})});

  // pairwise distinct complements: the component size multisets differ
  for (int n = 5; n <= 10; ++n) {
    auto specs = enum_n_minus_3_regular(n);
    std::vector<std::vector<int>> fingerprints;
    for (const auto& spec : specs) {
      Graph co = gen_co_cycles(spec).complement();
      std::vector<int> sizes;
      for (VertexSet comp : components(co)) sizes.push_back(set_size(comp));
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == spec.cycle_lengths);
      fingerprints.push_back(sizes);
    }
    std::sort(fingerprints.begin(), fingerprints.end());
    CHECK(std::adjacent_find(fingerprints.begin(), fingerprints.end()) ==
          fingerprints.end());
  }
}

TEST_CASE("every labeled (n-3)-regular graph maps to exactly one spec") {
  for (int n = 5; n <= 8; ++n) {
    CAPTURE(n);
    auto specs = enum_n_minus_3_regular(n);
    std::map<std::vector<int>, int> seen;
    std::uint64_t count = 0;
    for_each_labeled_regular(n, n - 3, [&](const Graph& g) {
      ++count;
      Graph co = g.complement();
      std::vector<int> sizes;
      for (VertexSet comp : components(co)) {
        sizes.push_back(set_size(comp));
        // every complement component must be a cycle
        for (int v : set_vertices(comp)) CHECK(set_size(co.neighbors(v)) == 2);
      }
      std::sort(sizes.begin(), sizes.end());
      ++seen[sizes];
    });
    CHECK(count > 0);
    CHECK(seen.size() == specs.size());
    for (const auto& spec : specs) CHECK(seen.count(spec.cycle_lengths) == 1);
  }

  // the pruned regular enumerator agrees with the naive filter on small n
  for (int n = 4; n <= 6; ++n) {
    for (int degree = 0; degree < n; ++degree) {
      std::uint64_t direct = 0, filtered = 0;
      for_each_labeled_regular(n, degree, [&](const Graph&) { ++direct; });
      for_each_labeled_graph(n, [&](const Graph& g) {
        bool regular = true;
        for (int v = 0; v < n; ++v)
          if (g.degree(v) != degree) regular = false;
        if (regular) ++filtered;
      });
      CHECK(direct == filtered);
    }
  }
}

TEST_CASE("enum_tpartite_specs") {
  auto specs = enum_tpartite_specs(3);
  CHECK(specs == std::vector<PartiteSpec>{PartiteSpec::of({1, 1}),
                                          PartiteSpec::of({1, 2}),
                                          PartiteSpec::of({1, 1, 1})});

  auto four = enum_tpartite_specs(4);
  CHECK(std::count(four.begin(), four.end(), PartiteSpec::of({2, 2})) == 1);
  CHECK(std::count(four.begin(), four.end(), PartiteSpec::of({1, 3})) == 1);

  // count oracle: partitions of k into >= 2 parts, summed over k = 2..8
  int expected = 0;
  for (int k = 2; k <= 8; ++k) expected += partitions_with_min(k, 1) - 1;
  CHECK(static_cast<int>(enum_tpartite_specs(8).size()) == expected);
  CHECK(expected == 58);
}

TEST_CASE("is_all_threes") {
  auto t3 = is_all_threes(gen_tpartite(PartiteSpec::of({3, 3, 3})).graph);
  REQUIRE(t3.has_value());
  CHECK(*t3 == 3);

  CHECK_FALSE(is_all_threes(gen_co_cycles(CoCycleSpec::of({9}))).has_value());

  auto t2 = is_all_threes(gen_tpartite(PartiteSpec::of({3, 3})).graph);
  REQUIRE(t2.has_value());
  CHECK(*t2 == 2);
}

TEST_CASE("parse/serialize identity over every sweep graph") {
  for (const PartiteSpec& spec : enum_tpartite_specs(10)) {
    Graph g = gen_tpartite(spec).graph;
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
  for (int n = 3; n <= 10; ++n)
    for (const CoCycleSpec& spec : enum_n_minus_3_regular(n)) {
      Graph g = gen_co_cycles(spec);
      CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}

TEST_CASE("family recognition round-trips") {
  for (const PartiteSpec& spec : enum_tpartite_specs(9)) {
    auto rec = recognize_tpartite(gen_tpartite(spec).graph);
    REQUIRE(rec.has_value());
    CHECK(*rec == spec);
  }
  for (int n = 5; n <= 9; ++n)
    for (const CoCycleSpec& spec : enum_n_minus_3_regular(n)) {
      auto rec = recognize_co_cycles(gen_co_cycles(spec));
      REQUIRE(rec.has_value());
      CHECK(*rec == spec);
    }

  Graph c5 = Graph::from_edges(
      5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)});
  CHECK_FALSE(recognize_tpartite(c5).has_value());
  auto rec = recognize_co_cycles(c5);
  REQUIRE(rec.has_value());  // C5 is its own complement's cycle
  CHECK(rec->cycle_lengths == std::vector<int>{5});

  // a path is neither
  Graph p4 = Graph::from_edges(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK_FALSE(recognize_co_cycles(p4).has_value());
}
