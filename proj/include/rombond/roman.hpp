#pragma once

#include <cstdint>
#include <vector>

#include "rombond/graph.hpp"

namespace rombond {

// Per-vertex labels in {0,1,2}. Valid as a Roman dominating function iff
// every 0-labeled vertex has a 2-labeled neighbor.
struct RomanAssignment {
  std::vector<std::uint8_t> values;

  int weight() const;
};

bool is_valid_rdf(const Graph& g, const RomanAssignment& f);

struct GammaResult {
  int value = 0;
  RomanAssignment witness;  // lexicographically least optimal value vector
  std::uint64_t nodes_explored = 0;
};

struct DominationResult {
  int value = 0;
  std::vector<int> witness;  // first minimum dominating set in (size, lex) order
  std::uint64_t nodes_explored = 0;
};

// Exact Roman domination number. Searches sets S of 2-labeled vertices by
// ascending cardinality (every vertex outside N[S] takes label 1), which the
// unit tests validate against the full 3^n enumeration.
GammaResult gamma_roman(const Graph& g);

// Exact classical domination number.
DominationResult gamma_classical(const Graph& g);

namespace detail {

// Decision procedures on raw adjacency rows (the bondage search keeps a
// mutable overlay of the rows and calls these millions of times).
bool rdf_weight_within(const std::uint64_t* adj, int n, int limit);
bool dominating_set_within(const std::uint64_t* adj, int n, int limit);

}  // namespace detail

}  // namespace rombond
