#pragma once

#include <string>
#include <vector>

#include "rgasym/exact_counts.hpp"
#include "rgasym/laplace.hpp"
#include "rgasym/regular_expansion.hpp"
#include "rgasym/series.hpp"

namespace rgasym {

/// a_n ~ n^(alpha n) beta^n n^gamma A~(1/n), with
/// beta = factor * e^e_power * base^base_power kept symbolic.
struct GrowthScale {
  Rational alpha;
  Rational gamma;
  Rational factor = 1;
  Rational e_power = 0;
  Rational base = 1;
  Rational base_power = 0;

  /// Scale of SG_n / n!: alpha = k/2 - 1, beta = e (k/e)^(k/2) / k!, gamma = -1/2.
  static GrowthScale regular(int k) {
    GrowthScale s;
    s.alpha = make_rational(k - 2, 2);
    s.gamma = make_rational(-1, 2);
    s.factor = Rational(1) / Rational(factorial(k));
    s.e_power = make_rational(2 - k, 2);
    s.base = k;
    s.base_power = make_rational(k, 2);
    return s;
  }

  bool half_integer_alpha() const { return alpha.get_den() == 2; }

  void check() const {
    if (sgn(alpha) <= 0) throw BadScale("alpha must be positive, got " + to_string(alpha));
    if (alpha.get_den() != 1 && alpha.get_den() != 2) {
      throw BadScale("alpha must be an integer or a half-integer, got " + to_string(alpha));
    }
  }

  /// e^(-alpha j) beta^(-j), when it is rational.
  Rational prefactor(int j) const {
    if (!is_zero(alpha + e_power)) throw IrrationalPrefactor("e-powers do not cancel in the shift prefactor");
    Rational exponent = base_power * j;
    if (!is_integer(exponent)) {
      throw IrrationalPrefactor("base^" + to_string(Rational(-exponent)) + " is not rational (j=" + std::to_string(j) +
                                ")");
    }
    return pow(factor, -j) * pow(base, -exponent.get_num().get_si());
  }
};

namespace detail {

/// (1 - jz)^(gamma - alpha j) e^(alpha (log(1 - jz) + jz) / z) A~(z / (1 - jz)), to `order`.
inline Series shift_core(const Series& atilde, int j, const Rational& alpha, const Rational& gamma, int order) {
  if (atilde.order() < order) throw InsufficientOrder("A~ needed through order " + std::to_string(order));
  Series one_minus_jz({Rational(1), Rational(-j)}, order + 1);
  Series mercator = log_series(one_minus_jz) + Series({Rational(0), Rational(j)}, order + 1);
  if (mercator.valuation() < 2) throw ValuationViolation("log(1 - jz) + jz must have valuation 2");
  Series damp = exp_series(mercator.shifted_down(1) * alpha).truncated(order);
  Series power = pow_rational(one_minus_jz.truncated(order), gamma - alpha * j);
  Series arg = div(Series::variable(order), one_minus_jz.truncated(order));
  return power * damp * compose(atilde.truncated(order), arg);
}

}  // namespace detail

/// A~_j(z) = e^(-alpha j) beta^(-j) z^(alpha j) (1 - jz)^(gamma - alpha j)
///           e^(alpha z^-1 (log(1 - jz) + jz)) A~(z / (1 - jz)), to `order`.
inline Series shifted_expansion(const Series& atilde, int j, const GrowthScale& scale, int order) {
  if (j < 0) throw Error("negative shift");
  Rational shift = scale.alpha * j;
  if (!is_integer(shift)) {
    throw IrrationalPrefactor("z^(alpha j) is not a monomial for alpha=" + to_string(scale.alpha) +
                              " j=" + std::to_string(j));
  }
  Rational pre = scale.prefactor(j);
  long v = shift.get_num().get_si();
  if (v > order) return Series(order);
  Series core = detail::shift_core(atilde, j, scale.alpha, scale.gamma, order - static_cast<int>(v));
  return (core * pre).shifted_up(static_cast<int>(v));
}

/// f_{k,j}(z): 1 for j = 0, else z^((k/2 - 1) j) when jk is even and 0 otherwise.
inline Series f_kj(int k, int j, int order) {
  if (k < 3) throw Error("f_kj needs k >= 3");
  Series out(order);
  if (j == 0) {
    out.set(0, Rational(1));
    return out;
  }
  if ((j * k) % 2 != 0) return out;
  int e = (k - 2) * j / 2;
  if (e <= order) out.set(e, Rational(1));
  return out;
}

/// A~^(k)_j in the regular-graph form with f_{k,j} and (k!/k^(k/2))^j.
inline Series regular_shifted_expansion(const Series& atilde, int k, int j, int order) {
  if ((j * k) % 2 != 0) throw IrrationalPrefactor("k and j both odd");
  Series f = f_kj(k, j, order);
  if (f.valuation() > order) return Series(order);
  Rational pre = pow(Rational(factorial(k)), j) / pow(Rational(k), k * j / 2);
  int v = f.valuation();
  Series core =
      detail::shift_core(atilde, j, make_rational(k - 2, 2), make_rational(-1, 2), order - v);
  return (core * pre).shifted_up(v);
}

/// Sum_j A~_j(z) h_j to order r. With a half-integer alpha only even j are
/// used; the sum stops at floor(r / alpha).
inline Series generic_transfer(const Series& atilde, const GrowthScale& scale, const std::vector<Rational>& hprime,
                               int r) {
  scale.check();
  Series out(r);
  Rational last = Rational(r) / scale.alpha;
  long jmax = Integer(last.get_num() / last.get_den()).get_si();
  int step = scale.half_integer_alpha() ? 2 : 1;
  for (long j = 0; j <= jmax; j += step) {
    if (static_cast<std::size_t>(j) >= hprime.size()) {
      throw InsufficientOrder("H' coefficients needed through j=" + std::to_string(jmax));
    }
    if (is_zero(hprime[static_cast<std::size_t>(j)])) continue;
    out += shifted_expansion(atilde, static_cast<int>(j), scale, r) * hprime[static_cast<std::size_t>(j)];
  }
  return out;
}

/// A~ = S~G / S~ to order r.
inline Series regular_atilde(int k, int r) {
  Series sg(sg_tilde_series(k, r), r);
  return div(sg, stirling_series(r));
}

enum class JCutoff { fixed, dynamic };

/// Coefficients [z^0..z^r] of the connected expansion:
/// S~(z) sum_j A~_j(z) [x^j] 1/SG(x), with j stopped at 2r (fixed) or at the
/// last j whose f_{k,j} valuation is <= r (dynamic).
inline std::vector<Rational> csg_tilde(int k, int r, const CountTable& counts, JCutoff cutoff = JCutoff::fixed) {
  if (k < 3) throw Error("connected expansion needs k >= 3");
  if (r < 0) throw Error("negative order");
  int jmax = 2 * r;
  if (cutoff == JCutoff::dynamic) jmax = 2 * r / (k - 2);
  std::vector<Rational> w = egf_reciprocal_coeffs(k, jmax, counts);
  Series atilde = regular_atilde(k, r);
  Series sum(r);
  for (int j = 0; j <= jmax; ++j) {
    if (is_zero(w[static_cast<std::size_t>(j)]) || (j * k) % 2 != 0) continue;
    sum += regular_shifted_expansion(atilde, k, j, r) * w[static_cast<std::size_t>(j)];
  }
  return (stirling_series(r) * sum).coefficients();
}

/// (k + 1)(k - 2) / 2.
inline int predicted_gap(int k) { return (k + 1) * (k - 2) / 2; }

struct GapReport {
  int valuation = 0;
  std::vector<Rational> difference;
};

/// Valuation of C~SG - S~G through order r, from
/// S~ sum_{j >= 1} A~_j [x^j] 1/SG, which needs A~ only to order r - min shift.
inline GapReport valuation_gap(int k, int r, const CountTable& counts) {
  if (k < 3) throw Error("valuation gap needs k >= 3");
  const int gap = predicted_gap(k);
  if (r < gap) throw InsufficientOrder("valuation gap needs r >= " + std::to_string(gap));
  const int jmax = 2 * r / (k - 2);
  std::vector<Rational> w = egf_reciprocal_coeffs(k, jmax, counts);
  int min_shift = r + 1;
  for (int j = 1; j <= jmax; ++j) {
    if (!is_zero(w[static_cast<std::size_t>(j)]) && (j * k) % 2 == 0) min_shift = std::min(min_shift, (k - 2) * j / 2);
  }
  Series sum(r);
  if (min_shift <= r) {
    Series atilde = regular_atilde(k, r - min_shift);
    for (int j = 1; j <= jmax; ++j) {
      if (is_zero(w[static_cast<std::size_t>(j)]) || (j * k) % 2 != 0) continue;
      int v = (k - 2) * j / 2;
      if (v > r) continue;
      Series shifted = regular_shifted_expansion(atilde, k, j, r - min_shift + v);
      sum += Series(shifted.coefficients(), r) * w[static_cast<std::size_t>(j)];
    }
  }
  Series diff = stirling_series(r) * sum;
  GapReport report{diff.valuation(), diff.coefficients()};
  if (report.valuation != gap) {
    std::string text;
    for (const auto& c : report.difference) text += " " + to_string(c);
    throw GapMismatch("valuation " + std::to_string(report.valuation) + " but predicted " + std::to_string(gap) +
                      "; difference:" + text);
  }
  return report;
}

}  // namespace rgasym
