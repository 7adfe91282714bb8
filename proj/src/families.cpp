#include "rombond/families.hpp"

#include <algorithm>
#include <numeric>

namespace rombond {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

PartiteSpec PartiteSpec::of(std::vector<int> parts) {
  if (parts.size() < 2)
    throw Error(ErrorKind::invalid_spec,
                "t-partite spec needs at least 2 parts, got " +
                    std::to_string(parts.size()));
  for (int p : parts)
    if (p < 1)
      throw Error(ErrorKind::invalid_spec,
                  "part size " + std::to_string(p) + " < 1");
  std::sort(parts.begin(), parts.end());
  PartiteSpec s;
  s.parts = std::move(parts);
  if (s.n() > Graph::max_order)
    throw Error(ErrorKind::too_large,
                "spec order " + std::to_string(s.n()) + " exceeds " +
                    std::to_string(Graph::max_order));
  return s;
}

int PartiteSpec::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int PartiteSpec::min_part_count() const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), parts.front()));
}

bool PartiteSpec::all_parts_equal(int value) const {
  return parts.front() == value && parts.back() == value;
}

std::string PartiteSpec::label() const { return join_ints(parts); }

CoCycleSpec CoCycleSpec::of(std::vector<int> lengths) {
  if (lengths.empty())
    throw Error(ErrorKind::invalid_spec, "co-cycle spec needs a cycle");
  for (int l : lengths)
    if (l < 3)
      throw Error(ErrorKind::invalid_spec,
                  "cycle length " + std::to_string(l) + " < 3");
  std::sort(lengths.begin(), lengths.end());
  CoCycleSpec s;
  s.cycle_lengths = std::move(lengths);
  if (s.n() > Graph::max_order)
    throw Error(ErrorKind::too_large,
                "spec order " + std::to_string(s.n()) + " exceeds " +
                    std::to_string(Graph::max_order));
  return s;
}

int CoCycleSpec::n() const {
  return std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
}

bool CoCycleSpec::all_threes() const {
  return cycle_lengths.back() == 3;
}

std::string CoCycleSpec::label() const { return "co:" + join_ints(cycle_lengths); }

TPartiteGraph gen_tpartite(const PartiteSpec& spec) {
  const int n = spec.n();
  std::vector<VertexSet> parts;
  int off = 0;
  for (int size : spec.parts) {
    VertexSet block = 0;
    for (int v = off; v < off + size; ++v) block |= vertex_bit(v);
    parts.push_back(block);
    off += size;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (int u : set_vertices(parts[a]))
        for (int v : set_vertices(parts[b])) edges.push_back(Edge(u, v));
  return TPartiteGraph{Graph::from_edges(n, edges), std::move(parts)};
}

Graph gen_co_cycles(const CoCycleSpec& spec) {
  const int n = spec.n();
  // Disjoint cycles on consecutive runs, then complement.
  std::vector<Edge> cycle_edges;
  int off = 0;
  for (int len : spec.cycle_lengths) {
    for (int i = 0; i < len; ++i)
      cycle_edges.push_back(Edge(off + i, off + (i + 1) % len));
    off += len;
  }
  return Graph::from_edges(n, cycle_edges).complement();
}

namespace {

// Integer partitions of n with parts >= min_part, nondecreasing, in
// ascending lexicographic order.
void partitions_rec(int remaining, int lo,
                    std::vector<int>& acc,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(acc);
    return;
  }
  for (int p = lo; p <= remaining; ++p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<CoCycleSpec> enum_n_minus_3_regular(int n) {
  if (n < 3)
    throw Error(ErrorKind::invalid_spec,
                "no (n-3)-regular graphs below order 3");
  std::vector<CoCycleSpec> out;
  std::vector<int> acc;
  partitions_rec(n, 3, acc, [&](const std::vector<int>& parts) {
    out.push_back(CoCycleSpec::of(parts));
  });
  return out;
}

std::vector<PartiteSpec> enum_tpartite_specs(int max_n) {
  if (max_n < 2)
    throw Error(ErrorKind::invalid_spec, "max_n must be at least 2");
  std::vector<PartiteSpec> out;
  for (int n = 2; n <= max_n; ++n) {
    // partitions of n into exactly t parts, t ascending
    for (int t = 2; t <= n; ++t) {
      std::vector<int> acc;
      partitions_rec(n, 1, acc, [&](const std::vector<int>& parts) {
        if (static_cast<int>(parts.size()) == t)
          out.push_back(PartiteSpec::of(parts));
      });
    }
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen & vertex_bit(v)) continue;
    VertexSet comp = vertex_bit(v);
    for (;;) {
      VertexSet grown = comp;
      for (int u : set_vertices(comp)) grown |= g.neighbors(u);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

std::optional<int> is_all_threes(const Graph& g) {
  Graph co = g.complement();
  int t = 0;
  for (VertexSet comp : components(co)) {
    if (set_size(comp) != 3) return std::nullopt;
    for (int v : set_vertices(comp))
      if ((co.neighbors(v) & comp) != (comp & ~vertex_bit(v)))
        return std::nullopt;  // not a triangle
    ++t;
  }
  return t;
}

std::optional<PartiteSpec> recognize_tpartite(const Graph& g) {
  Graph co = g.complement();
  std::vector<int> parts;
  for (VertexSet comp : components(co)) {
    for (int v : set_vertices(comp))
      if ((co.neighbors(v) & comp) != (comp & ~vertex_bit(v)))
        return std::nullopt;  // component is not a clique
    parts.push_back(set_size(comp));
  }
  if (parts.size() < 2) return std::nullopt;
  return PartiteSpec::of(parts);
}

std::optional<CoCycleSpec> recognize_co_cycles(const Graph& g) {
  Graph co = g.complement();
  std::vector<int> lengths;
  for (VertexSet comp : components(co)) {
    if (set_size(comp) < 3) return std::nullopt;
    for (int v : set_vertices(comp))
      if (set_size(co.neighbors(v)) != 2 || (co.neighbors(v) & ~comp))
        return std::nullopt;  // connected 2-regular component = cycle
    lengths.push_back(set_size(comp));
  }
  if (lengths.empty()) return std::nullopt;
  return CoCycleSpec::of(lengths);
}

void for_each_labeled_graph(int n,
                            const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back(Edge(u, v));
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    fn(Graph::from_edges(n, edges));
  }
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uint64_t bits = rng();
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bits >> i++ & 1) edges.push_back(Edge(u, v));
  return Graph::from_edges(n, edges);
}

}  // namespace rombond
