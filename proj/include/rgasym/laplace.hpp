#pragma once

#include <vector>

#include "rgasym/polynomial.hpp"
#include "rgasym/series.hpp"
#include "rgasym/tree_function.hpp"

namespace rgasym {

/// Local data of a Laplace integral  int A(t) exp(-n phi(t)) dt  around a
/// nondegenerate critical point at t = 0. The phase is already centered
/// (phi(0) removed) and phi2 = phi''(0) is passed explicitly.
struct PhaseAmplitude {
  Series phi;
  Series amp;
  Rational phi2;
};

/// Coefficients [z^l] of the series F(z) in
///   int A e^{-n phi} ~ e^{-n phi(0)} sqrt(2 pi / (phi''(0) n)) F(1/n).
struct LaplaceExpansion {
  std::vector<Rational> coeffs;

  friend bool operator==(const LaplaceExpansion&, const LaplaceExpansion&) = default;
};

namespace detail {

inline void check_phase(const PhaseAmplitude& pa) {
  if (pa.phi.order() < 2) throw InsufficientOrder("phase must be known through t^2");
  if (!is_zero(pa.phi[0]) || !is_zero(pa.phi[1])) {
    throw DegeneratePhase("phase must be centered with a critical point at 0");
  }
  if (is_zero(pa.phi[2])) throw DegeneratePhase("phase has vanishing second derivative at 0");
  if (pa.phi2 != 2 * pa.phi[2]) {
    throw DegeneratePhase("phi2 = " + to_string(pa.phi2) + " disagrees with 2 [t^2] phi = " +
                          to_string(Rational(2 * pa.phi[2])));
  }
}

inline void check_orders(const PhaseAmplitude& pa, int r) {
  if (r < 0) throw Error("expansion order must be >= 0");
  if (pa.phi.order() < 2 * r + 2 || pa.amp.order() < 2 * r) {
    throw InsufficientOrder("order " + std::to_string(r) + " expansion needs the phase through t^" +
                            std::to_string(2 * r + 2) + " and the amplitude through t^" + std::to_string(2 * r));
  }
}

}  // namespace detail

/// psi(t) = (phi(t) / (phi''(0) t^2 / 2))^(-1/2), of order phi.order() - 2.
inline Series psi_from_phase(const PhaseAmplitude& pa) {
  detail::check_phase(pa);
  Series ratio = pa.phi.shifted_down(2) * (Rational(2) / pa.phi2);
  return pow_rational(ratio, make_rational(-1, 2));
}

/// F(z) = exp(z x^2 / (2 phi''(0))) (.)_{x=1} A(T(x)) T'(x), with T = x psi(T).
inline LaplaceExpansion expand_hadamard(const PhaseAmplitude& pa, int r) {
  detail::check_orders(pa, r);
  const int n = 2 * r;
  Series psi = psi_from_phase(pa).truncated(n);
  Series tree = newton_solve_tree(psi);  // order n + 1
  Series integrand = compose(pa.amp.truncated(n), tree.truncated(n)) * tree.derivative();

  const MomentWeights alpha{{0, Rational(1) / pa.phi2}};
  LaplaceExpansion out;
  for (int l = 0; l <= r; ++l) {
    auto term = RationalPolynomial::term(Monomial::variable(0, static_cast<unsigned>(2 * l)), integrand[2 * l]);
    out.coeffs.push_back(gaussian_hadamard(term, alpha));
  }
  return out;
}

/// [z^l] F = (2l-1)!! / phi''(0)^l [t^(2l)] A(t) psi(t)^(2l+1).
inline LaplaceExpansion expand_direct(const PhaseAmplitude& pa, int r) {
  detail::check_orders(pa, r);
  const int n = 2 * r;
  Series psi = psi_from_phase(pa).truncated(n);
  Series amp = pa.amp.truncated(n);
  LaplaceExpansion out;
  for (int l = 0; l <= r; ++l) {
    Series prod = amp * pow_rational(psi, Rational(2 * l + 1));
    out.coeffs.push_back(prod[2 * l] * Rational(double_factorial(2 * l - 1)) / pow(pa.phi2, l));
  }
  return out;
}

/// t - log(1 + t) through t^order: the centered phase of n!.
inline Series stirling_phase(int order) {
  Series one_plus_t({Rational(1), Rational(1)}, order);
  return Series::variable(order) - log_series(one_plus_t);
}

/// t^2/2 + t - log(1 + t) through t^order, with second derivative 2 at 0.
inline Series regular_graph_phase(int order) {
  Series half_square(order);
  if (order >= 2) half_square.set(2, make_rational(1, 2));
  return half_square + stirling_phase(order);
}

/// Stirling's series: n! ~ n^n e^-n sqrt(2 pi n) S(1/n), coefficients 0..r.
inline Series stirling_series(int r) {
  if (r < 0) throw Error("stirling series order must be >= 0");
  PhaseAmplitude pa{stirling_phase(2 * r + 2), Series::constant(Rational(1), 2 * r), Rational(1)};
  return Series(expand_hadamard(pa, r).coeffs, r);
}

}  // namespace rgasym
