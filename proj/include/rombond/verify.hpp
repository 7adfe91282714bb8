#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rombond/graph.hpp"

namespace rombond {

// One family instance: closed-form value vs. exhaustive search.
struct VerificationRow {
  std::string spec;
  std::string case_tag;
  int expected = 0;
  int actual = 0;
  bool match = false;
  double time_ms = 0.0;
  std::uint64_t subsets_tested = 0;
  std::string counterexample;  // edge-list text when match is false
};

// One sampled/exhaustive order for the gamma_R = 3 <=> max degree = n-2
// equivalence.
struct EquivalenceRow {
  int n = 0;
  std::string mode;  // "exhaustive" or "random"
  std::uint64_t graphs_checked = 0;
  std::uint64_t mismatches = 0;
  std::string counterexample;
};

bool all_match(const std::vector<VerificationRow>& rows);
bool all_match(const std::vector<EquivalenceRow>& rows);

// gamma_R of every complete t-partite graph with n <= max_n.
std::vector<VerificationRow> verify_lemma_2_1(int max_n);

// b_R = ceil(t/2) on the named graphs with t >= 1 universal vertices.
std::vector<VerificationRow> verify_lemma_2_2();

// gamma_R = 3 <=> max degree = n-2: exhaustive over labeled graphs with at
// least one edge for 3 <= n <= 6, seeded random spot checks at n = 7, 8.
std::vector<EquivalenceRow> verify_lemma_2_3(int max_n, std::uint64_t seed,
                                             int random_per_n = 500);

// gamma_R = 4 for every (n-3)-regular graph, 4 <= n <= max_n.
std::vector<VerificationRow> verify_lemma_2_4(int max_n);

// b_R of every complete t-partite graph with 3 <= n <= max_n against the
// five-case formula. All-3s specs of order >= 9 run with cover pruning.
std::vector<VerificationRow> verify_thm_3_1(int max_n, int threads = 1);

// b_R of every (n-3)-regular graph with 5 <= n <= max_n against n-2 / n-1.
// Orders >= prune_from run with cover pruning.
std::vector<VerificationRow> verify_thm_4_1(int max_n, int threads = 1,
                                            int prune_from = 9);

}  // namespace rombond
