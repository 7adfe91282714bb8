#pragma once

#include <string>

#include "rombond/families.hpp"
#include "rombond/graph.hpp"

namespace rombond {

// Closed-form value with the case of the formula that produced it. Exactly
// one case fires per valid input.
struct FormulaValue {
  int value = 0;
  std::string case_tag;
  std::string source;  // which named result ("lemma2.1", "thm3.1", ...)
};

// gamma_R of a complete t-partite graph: 2 / 3 / 4 by the minimum part size.
FormulaValue gamma_roman_tpartite(const PartiteSpec& spec);

// b_R of a graph with t_universal vertices of degree n-1: ceil(t/2).
// Inapplicable when t_universal = 0 or n < 3.
FormulaValue b_roman_universal(int t_universal, int n);

// Five-case b_R formula for complete t-partite graphs, plus the K_{3,3}
// value (4) that the printed cases do not cover. Inapplicable for (1,1).
FormulaValue b_roman_tpartite(const PartiteSpec& spec);

// gamma_R of any (n-3)-regular graph of order n >= 4 is 4.
FormulaValue gamma_roman_n_minus_3_regular(int n);

// b_R of an (n-3)-regular graph of order n >= 5: n-1 for K_{3,3,...,3} with
// at least three parts, n-2 otherwise (including K_{3,3}).
FormulaValue b_roman_n_minus_3_regular(const CoCycleSpec& spec);

// gamma_R(g) = 3 iff max_degree(g) = n-2, for nonempty g with n >= 3.
bool gamma_roman_is_3(const Graph& g);

}  // namespace rombond
