#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rombond/bondage.hpp"
#include "rombond/families.hpp"
#include "rombond/graph.hpp"

namespace rombond {

enum class CheckStatus { holds, fails, not_applicable };

// relaxed skips the bondage-set re-verification so tests can drive the
// predicates' false branches with hand-built edge sets. Production callers
// (the audit runner, the CLI) always use verified.
enum class CheckMode { verified, relaxed };

struct CheckResult {
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;  // not-applicable reason or failing binding

  bool holds() const { return status == CheckStatus::holds; }
  bool fails() const { return status == CheckStatus::fails; }
};

// Structural facts about Roman bondage sets B of (n-3)-regular graphs.
// Every predicate validates its own preconditions (including that B really
// is a bondage set, in verified mode) and reports not_applicable with a
// reason when they fail.

// Every vertex is incident to at least one edge of B. (n >= 5)
CheckResult check_lemma_2_5(const Graph& g, const EdgeSet& b,
                            CheckMode mode = CheckMode::verified);

// With E(x) cap B = {xw} and y,z the two non-neighbors of x: every other
// vertex adjacent to all of y,z,w has a B-edge into {y,z,w}. (n >= 5)
CheckResult check_lemma_2_6(const Graph& g, const EdgeSet& b, int x,
                            CheckMode mode = CheckMode::verified);

// If some pairwise non-adjacent triple each meet B in exactly one edge,
// then |B| >= n-2, and |B| >= n-1 when g = K_{3,3,...,3}. (n >= 6)
CheckResult check_lemma_2_7(const Graph& g, const EdgeSet& b,
                            CheckMode mode = CheckMode::verified);

// With E(x) cap B = {xw} and y,z the non-neighbors of x: the subgraph of
// g - B induced on {y,z,w} has at most one edge. (n >= 5)
CheckResult check_lemma_2_8(const Graph& g, const EdgeSet& b, int x,
                            CheckMode mode = CheckMode::verified);

struct Counterexample {
  std::string lemma;
  std::string graph;  // edge-list text, replayable
  EdgeSet bondage_set;
  std::string binding;  // which vertices the predicate was bound to
};

struct LemmaTally {
  std::string lemma;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t not_applicable = 0;
  std::optional<Counterexample> first_failure;
};

struct AuditReport {
  CoCycleSpec spec;
  int gamma_base = 0;
  int b_r = 0;
  std::size_t witnesses_examined = 0;
  bool truncated = false;  // witness cap hit; more minimum sets may exist
  std::array<LemmaTally, 4> lemmas;  // 2.5, 2.6, 2.7, 2.8

  bool clean() const;
};

// Finds b_R of gen_co_cycles(spec) with an unpruned search (the audited
// lemmas are never assumed by the search that produces their evidence),
// enumerates up to max_witnesses minimum Roman bondage sets, and evaluates
// all four predicates over every applicable binding.
AuditReport audit(const CoCycleSpec& spec, std::size_t max_witnesses);

}  // namespace rombond
