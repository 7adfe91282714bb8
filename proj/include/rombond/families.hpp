#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rombond/graph.hpp"

namespace rombond {

// Complete t-partite graph K_{m_1,...,m_t}; parts stored ascending so the
// minimum part size and its multiplicity read directly off the front.
struct PartiteSpec {
  std::vector<int> parts;  // ascending, each >= 1, at least 2 parts

  static PartiteSpec of(std::vector<int> parts);  // sorts and validates

  int t() const { return static_cast<int>(parts.size()); }
  int n() const;
  int min_part() const { return parts.front(); }
  int max_part() const { return parts.back(); }
  int min_part_count() const;  // number of parts equal to min_part()
  bool all_parts_equal(int value) const;

  std::string label() const;  // "3,3,4"

  friend auto operator<=>(const PartiteSpec&, const PartiteSpec&) = default;
};

// (n-3)-regular graph of order n = sum of cycle_lengths, realized as the
// complement of a disjoint union of cycles (a length-3 cycle is a triangle).
struct CoCycleSpec {
  std::vector<int> cycle_lengths;  // ascending, each >= 3

  static CoCycleSpec of(std::vector<int> lengths);

  int n() const;
  bool all_threes() const;

  std::string label() const;  // "co:3,6"

  friend auto operator<=>(const CoCycleSpec&, const CoCycleSpec&) = default;
};

struct TPartiteGraph {
  Graph graph;
  std::vector<VertexSet> parts;  // X_1..X_t as vertex masks, ascending blocks
};

TPartiteGraph gen_tpartite(const PartiteSpec& spec);
Graph gen_co_cycles(const CoCycleSpec& spec);

// All CoCycleSpecs with total n (ascending lexicographic); one per
// isomorphism class of (n-3)-regular graphs of order n.
std::vector<CoCycleSpec> enum_n_minus_3_regular(int n);  // n >= 3

// All PartiteSpecs with t >= 2 and total <= max_n, ordered by (n, t, parts).
std::vector<PartiteSpec> enum_tpartite_specs(int max_n);  // max_n >= 2

// Part count t if the complement of g is a disjoint union of triangles
// (g = K_{3,3,...,3}), otherwise nullopt.
std::optional<int> is_all_threes(const Graph& g);

// Family recognition via complement components (cliques -> t-partite,
// cycles -> co-cycles). Used for witness seeding and CLI reporting.
std::optional<PartiteSpec> recognize_tpartite(const Graph& g);
std::optional<CoCycleSpec> recognize_co_cycles(const Graph& g);

// Connected components as vertex masks, in order of smallest vertex.
std::vector<VertexSet> components(const Graph& g);

// Sweep helpers. for_each_labeled_graph visits all 2^C(n,2) labeled graphs
// on n vertices in edge-mask order; random_graph draws each edge with
// probability 1/2 (n <= 11 so one 64-bit word of randomness suffices).
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);
Graph random_graph(int n, std::mt19937_64& rng);

}  // namespace rombond
