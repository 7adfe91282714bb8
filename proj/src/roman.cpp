#include "rombond/roman.hpp"

#include <algorithm>
#include <numeric>

namespace rombond {

int RomanAssignment::weight() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

bool is_valid_rdf(const Graph& g, const RomanAssignment& f) {
  if (static_cast<int>(f.values.size()) != g.order())
    throw Error(ErrorKind::length_mismatch,
                "assignment has " + std::to_string(f.values.size()) +
                    " values for order " + std::to_string(g.order()));
  VertexSet twos = 0;
  for (int v = 0; v < g.order(); ++v)
    if (f.values[v] == 2) twos |= vertex_bit(v);
  for (int v = 0; v < g.order(); ++v)
    if (f.values[v] == 0 && !(g.neighbors(v) & twos)) return false;
  return true;
}

namespace {

// Label induced by a 2-set: 2 on S, 1 outside N[S], 0 elsewhere.
inline int induced_value(VertexSet s, VertexSet covered, int v) {
  if (s >> v & 1) return 2;
  if (!(covered >> v & 1)) return 1;
  return 0;
}

// Lexicographic comparison of the induced value vectors of two 2-sets.
int compare_induced(VertexSet s1, VertexSet c1, VertexSet s2, VertexSet c2,
                    int n) {
  for (int v = 0; v < n; ++v) {
    int a = induced_value(s1, c1, v);
    int b = induced_value(s2, c2, v);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

struct RomanSearch {
  int n = 0;
  std::array<std::uint64_t, Graph::max_order> closed{};
  std::vector<int> order;  // non-isolated vertices, descending degree
  int closed_max = 1;      // largest |N[v]| over branchable vertices

  std::uint64_t nodes = 0;
  int best_weight = 0;
  VertexSet best_set = 0;
  VertexSet best_cov = 0;

  void consider(VertexSet s, VertexSet cov, int count) {
    ++nodes;
    int weight = 2 * count + (n - set_size(cov));
    if (weight < best_weight ||
        (weight == best_weight &&
         compare_induced(s, cov, best_set, best_cov, n) < 0)) {
      best_weight = weight;
      best_set = s;
      best_cov = cov;
    }
  }

  // All 2-sets of size `size` drawn from order[start..], evaluated at full
  // size. Subtrees whose weight lower bound exceeds the incumbent are cut.
  void combos(std::size_t start, int remaining, VertexSet s, VertexSet cov,
              int size) {
    if (remaining == 0) {
      consider(s, cov, size);
      return;
    }
    for (std::size_t i = start; i + remaining <= order.size(); ++i) {
      int v = order[i];
      VertexSet cov2 = cov | closed[v];
      int lb = 2 * size + (n - set_size(cov2)) - (remaining - 1) * closed_max;
      if (lb > best_weight) continue;
      combos(i + 1, remaining - 1, s | vertex_bit(v), cov2, size);
    }
  }

  void run() {
    consider(0, 0, 0);  // all-ones baseline
    for (int size = 1; 2 * size <= best_weight &&
                       size <= static_cast<int>(order.size());
         ++size)
      combos(0, size, 0, 0, size);
  }
};

}  // namespace

GammaResult gamma_roman(const Graph& g) {
  const int n = g.order();
  RomanSearch search;
  search.n = n;
  search.best_weight = n + 1;  // looser than all-ones so the baseline lands
  for (int v = 0; v < n; ++v) {
    search.closed[v] = g.closed_neighborhood(v);
    if (g.degree(v) > 0) search.order.push_back(v);
  }
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int v : search.order)
    search.closed_max = std::max(search.closed_max, set_size(search.closed[v]));
  search.run();

  GammaResult out;
  out.value = search.best_weight;
  out.nodes_explored = search.nodes;
  out.witness.values.resize(n);
  for (int v = 0; v < n; ++v)
    out.witness.values[v] = static_cast<std::uint8_t>(
        induced_value(search.best_set, search.best_cov, v));
  return out;
}

namespace {

struct DominationSearch {
  int n = 0;
  VertexSet full = 0;
  std::array<std::uint64_t, Graph::max_order> closed{};
  int closed_max = 1;
  std::uint64_t nodes = 0;

  bool combos(int start, int remaining, VertexSet d, VertexSet cov,
              std::vector<int>& acc, std::vector<int>& out) {
    if (cov == full) {
      ++nodes;
      out = acc;
      return true;
    }
    if (remaining == 0) {
      ++nodes;
      return false;
    }
    if (set_size(full & ~cov) > remaining * closed_max) return false;
    for (int v = start; v + remaining <= n; ++v) {
      acc.push_back(v);
      if (combos(v + 1, remaining - 1, d | vertex_bit(v), cov | closed[v],
                 acc, out))
        return true;
      acc.pop_back();
    }
    return false;
  }
};

}  // namespace

DominationResult gamma_classical(const Graph& g) {
  const int n = g.order();
  DominationSearch search;
  search.n = n;
  search.full = g.vertices();
  for (int v = 0; v < n; ++v) {
    search.closed[v] = g.closed_neighborhood(v);
    search.closed_max = std::max(search.closed_max, set_size(search.closed[v]));
  }
  DominationResult out;
  std::vector<int> acc;
  for (int k = 1; k <= n; ++k) {
    acc.clear();
    std::vector<int> witness;
    if (search.combos(0, k, 0, 0, acc, witness)) {
      out.value = k;
      out.witness = std::move(witness);
      out.nodes_explored = search.nodes;
      return out;
    }
  }
  // n >= 1 guarantees D = V dominates; unreachable.
  throw std::logic_error("domination search fell through");
}

namespace detail {

namespace {

struct Rows {
  std::uint64_t closed[Graph::max_order];
  int order[Graph::max_order];
  int count = 0;
  int closed_max = 1;
};

void build_rows(const std::uint64_t* adj, int n, Rows& r, bool skip_isolated) {
  r.count = 0;
  r.closed_max = 1;
  int degs[Graph::max_order];
  for (int v = 0; v < n; ++v) {
    r.closed[v] = adj[v] | vertex_bit(v);
    degs[v] = set_size(adj[v]);
    if (!skip_isolated || degs[v] > 0) r.order[r.count++] = v;
  }
  // insertion sort by descending degree, stable on index
  for (int i = 1; i < r.count; ++i) {
    int v = r.order[i];
    int j = i;
    while (j > 0 && degs[r.order[j - 1]] < degs[v]) {
      r.order[j] = r.order[j - 1];
      --j;
    }
    r.order[j] = v;
  }
  for (int i = 0; i < r.count; ++i)
    r.closed_max = std::max(r.closed_max, set_size(r.closed[r.order[i]]));
}

bool rdf_combos(const Rows& r, int n, int limit, int start, int count,
                VertexSet cov, int max_twos) {
  if (2 * count + (n - set_size(cov)) <= limit) return true;
  if (count == max_twos) return false;
  // Can any number of further 2s still reach the limit?
  int unc = n - set_size(cov);
  bool reachable = false;
  for (int j = 1; j <= max_twos - count; ++j)
    if (2 * (count + j) + std::max(0, unc - j * r.closed_max) <= limit) {
      reachable = true;
      break;
    }
  if (!reachable) return false;
  for (int i = start; i < r.count; ++i)
    if (rdf_combos(r, n, limit, i + 1, count + 1, cov | r.closed[r.order[i]],
                   max_twos))
      return true;
  return false;
}

}  // namespace

bool rdf_weight_within(const std::uint64_t* adj, int n, int limit) {
  if (limit < 0) return false;
  if (n <= limit) return true;  // all ones
  int max_twos = limit / 2;
  if (max_twos == 0) return false;
  Rows r;
  build_rows(adj, n, r, /*skip_isolated=*/true);
  return rdf_combos(r, n, limit, 0, 0, 0, max_twos);
}

bool dominating_set_within(const std::uint64_t* adj, int n, int limit) {
  if (limit <= 0) return false;
  VertexSet full = n == Graph::max_order ? ~VertexSet{0}
                                         : (VertexSet{1} << n) - 1;
  Rows r;
  build_rows(adj, n, r, /*skip_isolated=*/false);

  struct Rec {
    const Rows& r;
    VertexSet full;
    bool go(int start, int remaining, VertexSet cov) {
      if (cov == full) return true;
      if (remaining == 0) return false;
      if (set_size(full & ~cov) > remaining * r.closed_max) return false;
      for (int i = start; i < r.count; ++i)
        if (go(i + 1, remaining - 1, cov | r.closed[r.order[i]])) return true;
      return false;
    }
  } rec{r, full};
  return rec.go(0, limit, 0);
}

}  // namespace detail

}  // namespace rombond
