#pragma once

#include <cstdint>
#include <optional>

#include "rombond/families.hpp"
#include "rombond/graph.hpp"

namespace rombond {

struct BondageOptions {
  // Give up once all edge subsets of size <= budget are exhausted.
  std::optional<int> budget;
  // Restrict the search to edge subsets covering every vertex and skip
  // k < ceil(n/2). Sound only for (n-3)-regular inputs with n >= 5 (every
  // Roman bondage set of such a graph touches every vertex); the solver
  // verifies that shape and rejects the flag otherwise.
  bool prune_regular = false;
};

struct BondageResult {
  int value = 0;
  EdgeSet witness;  // first success in (k, lexicographic) order
  int base = 0;     // domination value of the input
  int raised = 0;   // domination value after removing the witness
  std::uint64_t subsets_tested = 0;
};

// Minimum number of edges whose removal raises gamma_R (resp. gamma).
// Iterative deepening on k with lexicographic subset enumeration over the
// sorted edge list. Throws: empty_graph (no edges), no_bondage_set
// (gamma_R(g) = n, i.e. max degree <= 1), budget_exhausted.
BondageResult bondage_roman(const Graph& g, const BondageOptions& opt = {});
BondageResult bondage_classical(const Graph& g, const BondageOptions& opt = {});

// Constructive bondage sets for the supported families, in the canonical
// generator labeling. The returned set is post-checked: removing it must
// raise gamma_R of the generated graph. Throws unsupported_family outside
// the covered cases (t-partite with n < 3; co-cycles with n < 5).
EdgeSet construct_bondage_witness(const PartiteSpec& spec);
EdgeSet construct_bondage_witness(const CoCycleSpec& spec);

struct BondageEnumeration {
  std::vector<EdgeSet> sets;  // lexicographic order
  bool truncated = false;     // stopped at max_count; more may exist
  std::uint64_t subsets_tested = 0;
};

// All Roman bondage sets of size exactly k, in lexicographic order, up to
// max_count. Used by the lemma audit (k = b_R gives all minimum sets).
BondageEnumeration enumerate_roman_bondage_sets(const Graph& g, int k,
                                                std::size_t max_count);

}  // namespace rombond
