#include "rombond/formulas.hpp"

namespace rombond {

FormulaValue gamma_roman_tpartite(const PartiteSpec& spec) {
  const int m1 = spec.min_part();
  if (m1 == 1) return {2, "m_1=1", "lemma2.1"};
  if (m1 == 2) return {3, "m_1=2", "lemma2.1"};
  return {4, "m_1>=3", "lemma2.1"};
}

FormulaValue b_roman_universal(int t_universal, int n) {
  if (n < 3)
    throw Error(ErrorKind::inapplicable,
                "universal-vertex formula needs order >= 3, got " +
                    std::to_string(n));
  if (t_universal < 1)
    throw Error(ErrorKind::inapplicable,
                "universal-vertex formula needs at least one vertex of "
                "degree n-1");
  return {(t_universal + 1) / 2, "ceil(t/2), t=" + std::to_string(t_universal),
          "lemma2.2"};
}

FormulaValue b_roman_tpartite(const PartiteSpec& spec) {
  const int n = spec.n();
  const int mi = spec.min_part();
  const int i = spec.min_part_count();
  const int mt = spec.max_part();

  // K_{3,3} sits outside the printed case split (m_i = 3 with i = t = 2);
  // its value is n-2 = 4.
  if (spec.parts == std::vector<int>{3, 3}) return {4, "K_{3,3}", "thm3.1"};

  if (mi == 1) {
    if (n < 3)
      throw Error(ErrorKind::inapplicable,
                  "b_R undefined for " + spec.label() + " (order " +
                      std::to_string(n) + " < 3)");
    // ceil(i/2); the floor variant would give 0 at i = 1, impossible since
    // b_R >= 1 whenever a bondage set exists.
    return {(i + 1) / 2, "m_i=1, ceil(i/2)", "thm3.1"};
  }
  if (mi == 2 && i == 1) return {2, "m_i=2, i=1", "thm3.1"};
  if (mi == 2) return {i, "m_i=2, i>=2", "thm3.1"};
  if (mi == 3 && i == spec.t()) return {n - 1, "m_i=3, i=t>=3", "thm3.1"};
  return {n - mt, "m_i>=3, m_t>=4", "thm3.1"};
}

FormulaValue gamma_roman_n_minus_3_regular(int n) {
  if (n < 4)
    throw Error(ErrorKind::inapplicable,
                "gamma_R formula for (n-3)-regular graphs needs n >= 4, "
                "got " + std::to_string(n));
  return {4, "(n-3)-regular", "lemma2.4"};
}

FormulaValue b_roman_n_minus_3_regular(const CoCycleSpec& spec) {
  const int n = spec.n();
  if (n < 5)
    throw Error(ErrorKind::inapplicable,
                "b_R formula for (n-3)-regular graphs needs n >= 5, got " +
                    std::to_string(n));
  if (spec.all_threes() && spec.cycle_lengths.size() >= 3)
    return {n - 1, "K_{3,3,...,3}", "thm4.1"};
  return {n - 2, "not K_{3,3,...,3}", "thm4.1"};
}

bool gamma_roman_is_3(const Graph& g) {
  if (g.order() < 3 || g.edge_count() == 0)
    throw Error(ErrorKind::inapplicable,
                "gamma_R=3 criterion needs a nonempty graph of order >= 3");
  return g.max_degree() == g.order() - 2;
}

}  // namespace rombond
