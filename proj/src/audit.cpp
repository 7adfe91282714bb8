#include "rombond/audit.hpp"

#include <algorithm>

#include "rombond/roman.hpp"

namespace rombond {

namespace {

CheckResult na(const std::string& reason) {
  return {CheckStatus::not_applicable, reason};
}

// Shared precondition block: g must be (n-3)-regular of order >= min_order
// and b a subset of E(g); in verified mode b must actually raise gamma_R.
// Returns nullopt when the preconditions hold.
std::optional<CheckResult> preconditions(const Graph& g, const EdgeSet& b,
                                         int min_order, CheckMode mode) {
  const int n = g.order();
  if (n < min_order)
    return na("order_below_" + std::to_string(min_order));
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 3) return na("not_(n-3)-regular");
  for (const Edge& e : b)
    if (!g.has_edge(e.u, e.v)) return na("edge_not_in_graph:" + to_string(e));
  if (mode == CheckMode::verified) {
    const int base = gamma_roman(g).value;
    if (gamma_roman(g.remove_edges(b)).value <= base)
      return na("not_a_bondage_set");
  }
  return std::nullopt;
}

EdgeSet intersect_incident(const EdgeSet& b, int x) {
  EdgeSet out;
  for (const Edge& e : b)
    if (e.u == x || e.v == x) out.push_back(e);
  return out;
}

// Binding for lemmas 2.6/2.8: x meets B in exactly one edge xw; y,z are the
// two non-neighbors of x. Returns an NA result on violated hypotheses.
struct OneEdgeBinding {
  int w = -1, y = -1, z = -1;
};

std::optional<CheckResult> bind_one_edge(const Graph& g, const EdgeSet& b,
                                         int x, OneEdgeBinding& out) {
  if (x < 0 || x >= g.order()) return na("x_out_of_range");
  EdgeSet at_x = intersect_incident(b, x);
  if (at_x.size() != 1)
    return na("x_incident_b_edges=" + std::to_string(at_x.size()));
  out.w = at_x[0].u == x ? at_x[0].v : at_x[0].u;
  VertexSet non = g.vertices() & ~g.closed_neighborhood(x);
  auto nv = set_vertices(non);
  // (n-3)-regularity gives exactly two non-neighbors
  out.y = nv[0];
  out.z = nv[1];
  return std::nullopt;
}

}  // namespace

CheckResult check_lemma_2_5(const Graph& g, const EdgeSet& b, CheckMode mode) {
  if (auto pre = preconditions(g, b, 5, mode)) return *pre;
  VertexSet touched = 0;
  for (const Edge& e : b) touched |= vertex_bit(e.u) | vertex_bit(e.v);
  if (touched == g.vertices()) return {CheckStatus::holds, ""};
  int missed = set_vertices(g.vertices() & ~touched).front();
  return {CheckStatus::fails,
          "vertex " + std::to_string(missed) + " untouched by B"};
}

CheckResult check_lemma_2_6(const Graph& g, const EdgeSet& b, int x,
                            CheckMode mode) {
  if (auto pre = preconditions(g, b, 5, mode)) return *pre;
  OneEdgeBinding bind;
  if (auto pre = bind_one_edge(g, b, x, bind)) return *pre;

  VertexSet trio =
      vertex_bit(bind.y) | vertex_bit(bind.z) | vertex_bit(bind.w);
  VertexSet excluded = trio | vertex_bit(x);
  for (int xp = 0; xp < g.order(); ++xp) {
    if (excluded & vertex_bit(xp)) continue;
    if ((g.neighbors(xp) & trio) != trio) continue;  // not adjacent to all
    bool hit = false;
    for (const Edge& e : b)
      if ((e.u == xp && (trio & vertex_bit(e.v))) ||
          (e.v == xp && (trio & vertex_bit(e.u)))) {
        hit = true;
        break;
      }
    if (!hit)
      return {CheckStatus::fails,
              "x'=" + std::to_string(xp) + " has no B-edge into {y,z,w}={" +
                  std::to_string(bind.y) + "," + std::to_string(bind.z) +
                  "," + std::to_string(bind.w) + "}"};
  }
  return {CheckStatus::holds, ""};
}

CheckResult check_lemma_2_7(const Graph& g, const EdgeSet& b, CheckMode mode) {
  if (auto pre = preconditions(g, b, 6, mode)) return *pre;
  const int n = g.order();
  const int required = is_all_threes(g) ? n - 1 : n - 2;

  int incident[Graph::max_order] = {};
  for (const Edge& e : b) {
    ++incident[e.u];
    ++incident[e.v];
  }

  for (int x = 0; x < n; ++x) {
    if (incident[x] != 1) continue;
    for (int y = x + 1; y < n; ++y) {
      if (incident[y] != 1 || g.has_edge(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (incident[z] != 1 || g.has_edge(x, z) || g.has_edge(y, z))
          continue;
        if (static_cast<int>(b.size()) < required)
          return {CheckStatus::fails,
                  "triple {" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + "} but |B|=" +
                      std::to_string(b.size()) + " < " +
                      std::to_string(required)};
      }
    }
  }
  return {CheckStatus::holds, ""};
}

CheckResult check_lemma_2_8(const Graph& g, const EdgeSet& b, int x,
                            CheckMode mode) {
  if (auto pre = preconditions(g, b, 5, mode)) return *pre;
  OneEdgeBinding bind;
  if (auto pre = bind_one_edge(g, b, x, bind)) return *pre;

  const Graph after = g.remove_edges(b);
  int inner = 0;
  const int trio[3] = {bind.y, bind.z, bind.w};
  for (int a = 0; a < 3; ++a)
    for (int c = a + 1; c < 3; ++c)
      if (after.has_edge(trio[a], trio[c])) ++inner;
  if (inner <= 1) return {CheckStatus::holds, ""};
  return {CheckStatus::fails,
          "{y,z,w}={" + std::to_string(bind.y) + "," + std::to_string(bind.z) +
              "," + std::to_string(bind.w) + "} keeps " +
              std::to_string(inner) + " edges after removal"};
}

bool AuditReport::clean() const {
  return std::all_of(lemmas.begin(), lemmas.end(),
                     [](const LemmaTally& t) { return t.fails == 0; });
}

namespace {

void tally(LemmaTally& t, const CheckResult& r, const Graph& g,
           const EdgeSet& b, const std::string& binding) {
  switch (r.status) {
    case CheckStatus::holds:
      ++t.holds;
      break;
    case CheckStatus::fails:
      ++t.fails;
      if (!t.first_failure)
        t.first_failure = Counterexample{t.lemma, to_edge_list(g), b,
                                         binding + ": " + r.detail};
      break;
    case CheckStatus::not_applicable:
      ++t.not_applicable;
      break;
  }
}

}  // namespace

AuditReport audit(const CoCycleSpec& spec, std::size_t max_witnesses) {
  const Graph g = gen_co_cycles(spec);
  const int n = g.order();
  if (n < 5)
    throw Error(ErrorKind::invalid_spec,
                "audit needs order >= 5, got " + std::to_string(n));

  AuditReport report;
  report.spec = spec;
  const char* names[4] = {"2.5", "2.6", "2.7", "2.8"};
  for (int i = 0; i < 4; ++i) report.lemmas[i].lemma = names[i];

  // Unpruned search: the lemmas under audit must not shape their own
  // evidence.
  BondageResult res = bondage_roman(g);
  report.gamma_base = res.base;
  report.b_r = res.value;

  BondageEnumeration en =
      enumerate_roman_bondage_sets(g, res.value, max_witnesses);
  report.witnesses_examined = en.sets.size();
  report.truncated = en.truncated;

  for (const EdgeSet& b : en.sets) {
    tally(report.lemmas[0], check_lemma_2_5(g, b), g, b, "whole set");
    if (n >= 6)
      tally(report.lemmas[2], check_lemma_2_7(g, b), g, b, "all triples");
    else
      ++report.lemmas[2].not_applicable;
    for (int x = 0; x < n; ++x) {
      EdgeSet at_x;
      for (const Edge& e : b)
        if (e.u == x || e.v == x) at_x.push_back(e);
      if (at_x.size() != 1) continue;  // hypothesis of 2.6/2.8 not met
      std::string binding = "x=" + std::to_string(x);
      tally(report.lemmas[1], check_lemma_2_6(g, b, x), g, b, binding);
      tally(report.lemmas[3], check_lemma_2_8(g, b, x), g, b, binding);
    }
  }
  return report;
}

}  // namespace rombond
