#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rgasym/laplace.hpp"
#include "rgasym/polynomial.hpp"
#include "rgasym/series.hpp"
#include "rgasym/tree_function.hpp"

namespace rgasym {

/// Variable slots used by the regular-graph pipeline: u, then t_1, t_2, ...
constexpr std::size_t kVarU = 0;
inline std::size_t t_var(int j) { return static_cast<std::size_t>(j); }

/// psi(t) = (1 + (log(1/(1+t)) + t - t^2/2) / t^2)^(-1/2), to `order`.
inline Series regular_psi(int order) {
  PhaseAmplitude pa{regular_graph_phase(order + 2), Series::constant(Rational(1), order), Rational(2)};
  return psi_from_phase(pa);
}

enum class URoute { newton, lagrange };

/// [s^p] (1 + T(s))^(-q) with T = x psi(T).
inline Rational u_pq(int p, int q, const Series& psi, URoute route = URoute::newton) {
  if (p < 0 || q < 0) throw Error("u_pq needs p, q >= 0");
  if (psi.order() < p) throw InsufficientOrder("u_pq needs psi through order " + std::to_string(p));
  if (p == 0) return 1;
  if (route == URoute::lagrange) {
    Series h_prime = binomial_series(Rational(-q - 1), p - 1) * Rational(-q);
    return lagrange_invert_coeff(h_prime, psi, p);
  }
  Series t = newton_solve_tree(psi.truncated(p - 1));
  return compose(binomial_series(Rational(-q), p), t.truncated(p))[p];
}

/// [z^p] (sum_{j>=2} t_j z^(j-1))^q / sqrt(1 - z^2).
inline RationalPolynomial v_pq(int p, int q) {
  if (p < 0 || q < 0) throw Error("v_pq needs p, q >= 0");
  PolySeries w(p);
  for (int j = 2; j <= p + 1; ++j) w.set(j - 1, RationalPolynomial::variable(t_var(j)));
  PolySeries acc = PolySeries::constant(RationalPolynomial(1), p);
  for (int i = 0; i < q; ++i) acc = acc * w;
  Series root = pow_rational(Series({Rational(1), Rational(0), Rational(-1)}, p), make_rational(-1, 2));
  return (acc * lift(root))[p];
}

/// Shared ingredients for one k and one truncation order in s.
class RegularContext {
 public:
  /// Everything needed for [s^m] C_2 with m <= order.
  RegularContext(int k, int order) : k_(k), order_(order) {
    if (k < 2) throw Error("regular expansion needs k >= 2");
    if (order < 0) throw Error("negative order");
    const int top = order + 2;
    psi_ = regular_psi(top);
    tree_ = newton_solve_tree(psi_).truncated(top);
  }

  int k() const { return k_; }
  int order() const { return order_; }
  const Series& psi() const { return psi_; }
  const Series& tree() const { return tree_; }

  const Rational& u(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = u_cache_.find(key);
    if (it != u_cache_.end()) return it->second;
    if (p > tree_.order()) throw InsufficientOrder("u_pq beyond the tree order");
    Rational value = compose(binomial_series(Rational(-q), p), tree_.truncated(p))[p];
    return u_cache_.emplace(key, value).first->second;
  }

  const RationalPolynomial& v(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = v_cache_.find(key);
    if (it != v_cache_.end()) return it->second;
    return v_cache_.emplace(key, v_pq(p, q)).first->second;
  }

 private:
  int k_;
  int order_;
  Series psi_;
  Series tree_;
  std::map<std::pair<int, int>, Rational> u_cache_;
  std::map<std::pair<int, int>, RationalPolynomial> v_cache_;
};

/// B_{0,j}(u, t) as a polynomial in u, t_1, t_2, ...
inline RationalPolynomial b0_row(int j, RegularContext& ctx) {
  const int k = ctx.k();
  const Rational half_km1 = make_rational(k - 1, 2);
  RationalPolynomial out;
  for (int l = 1; l <= j; ++l) {
    for (int a = 0; a <= l && a + l <= j; ++a) {
      for (int b = 0; a + b + l <= j; ++b) {
        const int m = a + b + l;
        Integer ff = falling_factorial(k, m);
        if (ff == 0) continue;
        const Rational& up = ctx.u(j - m, 3 * a + b + l);
        if (is_zero(up)) continue;
        const RationalPolynomial& vp = ctx.v(l - a, b);
        if (vp.is_zero()) continue;
        Rational c = Rational(ff) * pow(half_km1, a) * up / Rational(factorial(a) * factorial(b));
        Monomial mono;
        mono.set(kVarU, static_cast<unsigned>(m));
        mono.set(t_var(1), static_cast<unsigned>(j - m));
        out += RationalPolynomial::term(mono, c) * vp;
      }
    }
  }
  return out;
}

/// C_1 expanded in powers of u (no substitution), to the context order.
inline PolySeries c1_series(RegularContext& ctx) {
  const int k = ctx.k();
  const int n = ctx.order();
  const int top = n + 2;

  PolySeries b0(top);
  for (int j = 1; j <= top; ++j) b0.set(j, b0_row(j, ctx));
  PolySeries log_b = log_series(PolySeries::constant(RationalPolynomial(1), top) + b0);

  PolySeries t_st1 = substitute_scaled(ctx.tree(), t_var(1));
  PolySeries one_plus_t = PolySeries::constant(RationalPolynomial(1), top) + t_st1;
  RationalPolynomial u2t2 = RationalPolynomial::variable(kVarU, 2) * RationalPolynomial::variable(t_var(2));
  PolySeries quad = (pow_rational(one_plus_t.truncated(n), Rational(-2)) * PolySeries::constant(u2t2, n)).shifted_up(2) *
                    Rational(k * (k - 1));

  PolySeries numerator = quad - log_b;
  if (numerator.valuation() < 2) {
    throw ValuationViolation("C_1 numerator has s-valuation " + std::to_string(numerator.valuation()));
  }
  PolySeries exponent = numerator.shifted_down(2);
  exponent += pow_rational(one_plus_t.truncated(n), Rational(-4)) * make_rational((k - 1) * (k - 1), 4);
  RationalPolynomial shift = (RationalPolynomial::variable(kVarU, 2) * Rational(2 * k * k) + RationalPolynomial(1 - k)) *
                             make_rational(k - 1, 4);
  exponent.set(0, exponent[0] + shift);
  if (!exponent[0].is_zero()) throw ValuationViolation("C_1 exponent has a nonzero constant term");
  return exp_series(exponent);
}

/// C_2 = (C_1(-1/sqrt k) + C_1(1/sqrt k)) T'(s t_1), with u^2 = 1/k substituted.
inline PolySeries c2_series(RegularContext& ctx) {
  const int n = ctx.order();
  PolySeries c1 = c1_series(ctx);
  const Rational inv_k = make_rational(1, ctx.k());
  PolySeries sym = c1.map([&](const RationalPolynomial& p) { return p.sign_symmetrized(kVarU).substitute_square(kVarU, inv_k); });
  PolySeries dt = substitute_scaled(ctx.tree().derivative().truncated(n), t_var(1));
  return sym * dt;
}

/// Moment weights -1/(2k) for t_1 and -1/j for t_j, j = 2..jmax.
inline MomentWeights regular_weights(int k, int jmax) {
  MomentWeights w;
  w[t_var(1)] = make_rational(-1, 2 * k);
  for (int j = 2; j <= jmax; ++j) w[t_var(j)] = make_rational(-1, j);
  return w;
}

/// [z^r] of the normalized expansion for the given k, from its own pipeline.
inline Rational sg_tilde_coeff(int k, int r) {
  if (r < 0) throw Error("negative order");
  RegularContext ctx(k, 2 * r);
  PolySeries c2 = c2_series(ctx);
  Rational value = gaussian_hadamard(c2[2 * r], regular_weights(k, 2 * r + 2));
  return r % 2 == 0 ? value : Rational(-value);
}

/// Coefficients [z^0..z^r] from a single C_2 expansion to order 2r.
inline std::vector<Rational> sg_tilde_series(int k, int r) {
  if (r < 0) throw Error("negative order");
  RegularContext ctx(k, 2 * r);
  PolySeries c2 = c2_series(ctx);
  MomentWeights w = regular_weights(k, 2 * r + 2);
  std::vector<Rational> out;
  for (int j = 0; j <= r; ++j) {
    Rational value = gaussian_hadamard(c2[2 * j], w);
    out.push_back(j % 2 == 0 ? value : Rational(-value));
  }
  if (out[0] != 2) throw InternalAssertion("[z^0] is " + to_string(out[0]) + ", expected 2");
  return out;
}

/// Envelope (nk/e)^(nk/2) / k!^n * e^(-(k^2-1)/4) / sqrt(2) times a series in 1/n.
struct Expansion {
  int k = 0;
  Rational alpha;
  std::string beta_desc;
  Rational gamma;
  std::vector<Rational> coeffs;
};

inline Expansion sg_expansion(int k, int r) {
  return {k, make_rational(k, 2), "(k/e)^(k/2) / k!, times e^(-(k^2-1)/4) / sqrt(2)", Rational(0), sg_tilde_series(k, r)};
}

/// Numerator polynomial in k (coefficients of k^0, k^1, ...) over k^r.
struct FormalKPolynomial {
  int r = 0;
  std::vector<Rational> numerator;

  Rational evaluate(const Rational& k) const {
    Rational acc = 0;
    for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) acc = acc * k + *it;
    return acc / pow(k, r);
  }

  friend bool operator==(const FormalKPolynomial&, const FormalKPolynomial&) = default;
};

/// Coefficients (in increasing degree) of the interpolating polynomial.
inline std::vector<Rational> lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rational scale = ys[i] / denom;
    for (std::size_t d = 0; d < n; ++d) out[d] += basis[d] * scale;
  }
  while (out.size() > 1 && is_zero(out.back())) out.pop_back();
  return out;
}

/// k^r [z^r] sampled at k = kmin, ..., kmin + samples - 1, interpolated, and
/// checked at two further points.
template <class Sampler>
FormalKPolynomial formal_k_interpolate(int r, Sampler sample, int kmin = -1, int samples = -1) {
  if (r < 0) throw Error("negative order");
  if (kmin < 0) kmin = 2 * r + 2;
  if (samples < 0) samples = 4 * r + 1;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = 0; i < samples; ++i) {
    int k = kmin + i;
    xs.emplace_back(k);
    ys.push_back(sample(k) * pow(Rational(k), r));
  }
  FormalKPolynomial poly{r, lagrange_interpolate(xs, ys)};
  for (int extra = 0; extra < 2; ++extra) {
    int k = kmin + samples + extra;
    Rational expect = sample(k);
    if (poly.evaluate(Rational(k)) != expect) {
      throw DegreeOverflow("interpolant of degree <= " + std::to_string(samples - 1) + " misses k=" +
                           std::to_string(k) + " at r=" + std::to_string(r));
    }
  }
  return poly;
}

inline FormalKPolynomial formal_k_interpolate(int r) {
  return formal_k_interpolate(r, [r](int k) { return sg_tilde_coeff(k, r); });
}

}  // namespace rgasym
