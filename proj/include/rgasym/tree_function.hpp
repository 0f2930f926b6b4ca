#pragma once

#include <algorithm>

#include "rgasym/series.hpp"

namespace rgasym {

/// Solves T(x) = x psi(T(x)) by Newton iteration, doubling the number of
/// correct coefficients per step. The result has order psi.order() + 1.
inline Series newton_solve_tree(const Series& psi) {
  if (is_zero(psi[0])) throw BadConstantTerm("tree equation needs psi(0) != 0");
  const int target = psi.order() + 1;
  const Series dpsi = psi.order() > 0 ? psi.derivative() : Series(0);

  // T = psi(0) x is correct through order 1.
  Series t({Rational(0), psi[0]}, std::max(target, 1));
  int known = 1;
  while (known < target) {
    int m = std::min(2 * known, target);
    Series tm(t.coefficients(), m);
    // Newton step on G(T) = T - x psi(T):  T <- T - G(T) / (1 - x psi'(T)).
    Series inner = tm.truncated(m - 1);
    Series g = tm - compose(psi.truncated(m - 1), inner).shifted_up(1);
    int v = g.valuation();
    if (v > m) {
      t = tm;
      known = m;
      continue;
    }
    // G has valuation > known, so the slope is only needed through m - v.
    Series slope = Series::constant(Rational(1), m - v);
    if (m - v >= 1) slope -= compose(dpsi.truncated(m - v - 1), inner.truncated(m - v - 1)).shifted_up(1);
    t = tm - (g.shifted_down(v) * inverse(slope)).shifted_up(v);
    known = m;
  }
  return t.truncated(target);
}

/// [s^p] H(T(s)) for T = x psi(T), using (1/p) [s^(p-1)] H'(s) psi(s)^p.
inline Rational lagrange_invert_coeff(const Series& h_prime, const Series& psi, int p) {
  if (p < 1) throw Error("lagrange inversion needs p >= 1");
  if (psi.order() < p - 1 || h_prime.order() < p - 1) {
    throw InsufficientOrder("lagrange inversion at p=" + std::to_string(p) + " needs order " + std::to_string(p - 1));
  }
  Series psi_p = Series::constant(Rational(1), p - 1);
  const Series base = psi.truncated(p - 1);
  for (int i = 0; i < p; ++i) psi_p = psi_p * base;
  Series prod = h_prime.truncated(p - 1) * psi_p;
  return prod[p - 1] / p;
}

}  // namespace rgasym
