#include "doctest.h"
#include "rombond/audit.hpp"
#include "rombond/bondage.hpp"
#include "rombond/roman.hpp"

using namespace rombond;

namespace {

Graph co(std::vector<int> lengths) {
  return gen_co_cycles(CoCycleSpec::of(std::move(lengths)));
}

}  // namespace

TEST_CASE("lemma 2.5 on real minimum bondage sets") {
  Graph g = co({5});
  BondageResult res = bondage_roman(g);
  for (const EdgeSet& b :
       enumerate_roman_bondage_sets(g, res.value, 50).sets) {
    CheckResult r = check_lemma_2_5(g, b);
    CHECK(r.holds());
  }
}

TEST_CASE("predicates refuse bad preconditions with reasons") {
  Graph g = co({6});

  // a single edge is not a bondage set of the prism
  CheckResult r = check_lemma_2_5(g, {g.edges().front()});
  CHECK(r.status == CheckStatus::not_applicable);
  CHECK(r.detail == "not_a_bondage_set");

  // wrong family (order gate passes, regularity fails)
  Graph p5 = Graph::from_edges(
      5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
  CHECK(check_lemma_2_5(p5, {Edge(0, 1)}).detail == "not_(n-3)-regular");

  // order gates
  Graph k2_ish = co({4});  // order 4 < 5
  CHECK(check_lemma_2_5(k2_ish, {}).detail == "order_below_5");
  CHECK(check_lemma_2_7(co({5}), {}, CheckMode::relaxed).detail ==
        "order_below_6");

  // edge not in graph
  Graph c5 = co({5});
  CheckResult missing =
      check_lemma_2_5(c5, {Edge(0, 1)}, CheckMode::relaxed);
  // (0,1) is a complement edge of co:5
  CHECK(missing.status == CheckStatus::not_applicable);
  CHECK(missing.detail.substr(0, 17) == "edge_not_in_graph");
}

TEST_CASE("lemma 2.6/2.8 bindings") {
  // co:6 = complement of the hexagon; vertex 0 misses 1 and 5
  Graph g = co({6});
  EdgeSet b = {Edge(0, 2)};  // not a bondage set; relaxed mode only

  SUBCASE("verified mode refuses a non-bondage B") {
    CHECK(check_lemma_2_6(g, b, 0).status == CheckStatus::not_applicable);
  }

  SUBCASE("2.6 holds vacuously: no vertex is adjacent to all of y,z,w") {
    CheckResult r = check_lemma_2_6(g, b, 0, CheckMode::relaxed);
    CHECK(r.holds());
  }

  SUBCASE("2.8 sees both inner edges survive and fails") {
    // y,z,w = 1,5,2 and the edges (1,5),(2,5) survive removal of (0,2)
    CheckResult r = check_lemma_2_8(g, b, 0, CheckMode::relaxed);
    CHECK(r.fails());
  }

  SUBCASE("binding requires exactly one incident edge") {
    CheckResult none = check_lemma_2_6(g, {}, 0, CheckMode::relaxed);
    CHECK(none.detail == "x_incident_b_edges=0");
    CheckResult two = check_lemma_2_8(g, {Edge(0, 2), Edge(0, 3)}, 0,
                                      CheckMode::relaxed);
    CHECK(two.detail == "x_incident_b_edges=2");
  }
}

TEST_CASE("lemma 2.7 triple bound") {
  // K_{3,3}: any minimum bondage set has size 4 = n-2
  Graph g = co({3, 3});
  BondageResult res = bondage_roman(g);
  CHECK(res.value == 4);
  for (const EdgeSet& b :
       enumerate_roman_bondage_sets(g, res.value, 20).sets) {
    CheckResult r = check_lemma_2_7(g, b);
    CHECK_FALSE(r.fails());
  }

  // relaxed synthetic negative: an independent triple with one incident
  // edge each but |B| far below n-2
  // vertices 0,1,2 form a complement triangle = independent in K_{3,3}
  EdgeSet tiny = {Edge(0, 3), Edge(1, 4), Edge(2, 5)};
  CheckResult r = check_lemma_2_7(g, tiny, CheckMode::relaxed);
  CHECK(r.fails());
}

TEST_CASE("predicates are pure") {
  Graph g = co({5});
  BondageResult res = bondage_roman(g);
  EdgeSet b = res.witness;
  for (int round = 0; round < 2; ++round) {
    CHECK(check_lemma_2_5(g, b).holds());
    for (int x = 0; x < g.order(); ++x) {
      CheckResult a1 = check_lemma_2_6(g, b, x);
      CheckResult a2 = check_lemma_2_6(g, b, x);
      CHECK(a1.status == a2.status);
      CHECK(a1.detail == a2.detail);
    }
  }
}

TEST_CASE("audit runs") {
  SUBCASE("co:5") {
    AuditReport rep = audit(CoCycleSpec::of({5}), 10);
    CHECK(rep.b_r == 3);
    CHECK(rep.gamma_base == 4);
    CHECK(rep.clean());
    CHECK(rep.witnesses_examined >= 1);
    CHECK(rep.lemmas[0].holds == rep.witnesses_examined);
    CHECK(rep.lemmas[0].fails == 0);
    // 2.7 needs order >= 6
    CHECK(rep.lemmas[2].holds == 0);
    CHECK(rep.lemmas[2].not_applicable == rep.witnesses_examined);
  }
  SUBCASE("co:3,3") {
    AuditReport rep = audit(CoCycleSpec::of({3, 3}), 10);
    CHECK(rep.b_r == 4);
    CHECK(rep.clean());
    CHECK(rep.witnesses_examined == 9);  // K_{3,3} has 9 minimum sets
    CHECK_FALSE(rep.truncated);
    AuditReport capped = audit(CoCycleSpec::of({3, 3}), 4);
    CHECK(capped.witnesses_examined == 4);
    CHECK(capped.truncated);
  }
  SUBCASE("co:3,3,3 with one witness") {
    AuditReport rep = audit(CoCycleSpec::of({3, 3, 3}), 1);
    CHECK(rep.b_r == 8);
    CHECK(rep.witnesses_examined == 1);
    CHECK(rep.truncated);
    CHECK(rep.clean());
  }
  SUBCASE("order below 5 is rejected") {
    CHECK_THROWS_AS((void)audit(CoCycleSpec::of({4}), 5), Error);
  }
}
