#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rombond {

// A set of vertices as a 64-bit row; bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
std::vector<int> set_vertices(VertexSet s);

enum class ErrorKind {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  too_large,
  missing_edge,
  overlapping_sets,
  empty_set,
  syntax,
  length_mismatch,
  invalid_spec,
  empty_graph,
  no_bondage_set,
  budget_exhausted,
  unsupported_family,
  inapplicable,
};

std::string_view error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Undirected edge, normalized to u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);  // throws self_loop on a == b

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of normalized edges.
using EdgeSet = std::vector<Edge>;

std::string to_string(const Edge& e);
std::string to_string(const EdgeSet& b);

// Immutable simple graph on vertices 0..n-1, adjacency as one bit row per
// vertex. Cheap to copy; all operations return new graphs.
class Graph {
 public:
  static constexpr int max_order = 64;

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return full_; }

  VertexSet neighbors(int x) const;             // N(x)
  VertexSet closed_neighborhood(int x) const;   // N[x]
  int degree(int x) const;
  int max_degree() const;
  bool has_edge(int u, int v) const;

  EdgeSet edges() const;                // all edges, sorted
  EdgeSet incident_edges(int x) const;  // E(x)
  // Edges with one endpoint in s, the other in t; s and t must be disjoint
  // nonempty subsets of the vertex set.
  EdgeSet edges_between(VertexSet s, VertexSet t) const;

  Graph remove_edges(const EdgeSet& b) const;  // every edge of b must exist
  Graph complement() const;

  // Raw adjacency rows (entries past order() are zero). Solver loops copy
  // these into mutable overlays.
  const std::array<std::uint64_t, max_order>& rows() const { return adj_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  explicit Graph(int n);

  int n_ = 1;
  int m_ = 0;
  VertexSet full_ = 1;
  std::array<std::uint64_t, max_order> adj_{};
};

// Edge-list text format: first content line "n m", then m lines "u v".
// Lines starting with '#' are ignored. serialize() emits edges sorted, so
// parse(serialize(g)) == g.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace rombond
