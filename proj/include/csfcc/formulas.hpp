#pragma once

#include <stdexcept>

#include "composition.hpp"
#include "symfunc.hpp"

namespace csfcc {

namespace detail {
/// Sum over I |= n of coeff(I) * w_I * e_{partition(I)}; compositions with
/// w_I = 0 are skipped before the coefficient is evaluated.
template <class CoeffFn>
SymFunc sum_over_compositions(int n, CoeffFn&& coeff) {
  SymFunc f(Basis::Elementary);
  for (const Composition& c : compositions(n)) {
    Coeff w = weight_w(c);
    if (w == 0) continue;
    Coeff k = coeff(c);
    if (k != 0) f.add_term(partition_of(c), checked::mul(k, w));
  }
  return f;
}
}  // namespace detail

/// X of the path on n vertices: sum of w_I e_I.
inline SymFunc csf_path(int n) {
  if (n < 1) throw std::domain_error("csf_path: n must be >= 1");
  return detail::sum_over_compositions(n, [](const Composition&) -> Coeff { return 1; });
}

/// X of the cycle on n vertices: sum of (i_1 - 1) w_I e_I. Defined for
/// n >= 2; at n = 2 it is the single edge.
inline SymFunc csf_cycle(int n) {
  if (n < 2) throw std::domain_error("csf_cycle: n must be >= 2");
  return detail::sum_over_compositions(n, [](const Composition& c) -> Coeff { return c.part(1) - 1; });
}

/// X of the tadpole C_m^l (cycle length m, tail of l vertices), n = m + l:
/// sum of theta_plus(I, l + 1) w_I e_I. Needs m >= 2.
inline SymFunc csf_tadpole(int m, int l) {
  const int n = m + l;
  if (l < 0 || l > n - 2) throw std::domain_error("csf_tadpole: l must lie in [0, n-2]");
  return detail::sum_over_compositions(n, [l](const Composition& c) -> Coeff { return theta_plus(c, l + 1); });
}

/// X of the cycle-chord CC_ab as sum of Delta_I(b) w_I e_I, a, b >= 2.
/// Every coefficient is a nonnegative combination, so the result is
/// e-positive by construction.
inline SymFunc csf_cycle_chord(int a, int b) {
  if (a < 2 || b < 2) throw std::domain_error("csf_cycle_chord: a and b must be >= 2 (use csf_cycle otherwise)");
  return detail::sum_over_compositions(a + b, [b](const Composition& c) { return delta(c, b); });
}

/// c_I = sum_{i=1}^{b} theta_plus(I, i) - sum_{i=1}^{b-1} theta_minus(rev I, i).
/// Individual values may be negative.
inline Coeff cycle_chord_c(const Composition& c, int b) {
  const Composition rev = reverse(c);
  Coeff r = 0;
  for (int i = 1; i <= b; ++i) r += theta_plus(c, i);
  for (int i = 1; i < b; ++i) r -= theta_minus(rev, i);
  return r;
}

/// X of CC_ab through the tadpole telescoping: sum of c_I w_I e_I, valid
/// for a, b >= 1 with a + b >= 3.
inline SymFunc csf_cycle_chord_cI(int a, int b) {
  if (a < 1 || b < 1 || a + b < 3) throw std::domain_error("csf_cycle_chord_cI: need a, b >= 1 and a + b >= 3");
  return detail::sum_over_compositions(a + b, [b](const Composition& c) { return cycle_chord_c(c, b); });
}

}  // namespace csfcc
