#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgasym/polynomial.hpp"
#include "rgasym/rational.hpp"

namespace rgasym {

namespace detail {

inline bool is_one(const Rational& q) { return q == 1; }

template <class C>
bool is_one(const Polynomial<C>& p) {
  return p.is_constant() && p.constant_term() == C(1);
}

inline Rational unit_inverse(const Rational& q) {
  if (is_zero(q)) throw NonUnitDivisor("division by a series with zero constant term");
  return Rational(1) / q;
}

inline RationalPolynomial unit_inverse(const RationalPolynomial& p) {
  if (!p.is_constant() || p.is_zero()) {
    throw NonUnitDivisor("constant term of the divisor is not an invertible constant");
  }
  return RationalPolynomial(Rational(Rational(1) / p.constant_term()));
}

template <class R>
std::string describe(const R& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace detail

/// Power series truncated at a known order N: coefficients 0..N are exact and
/// everything beyond N is unknown (not zero). R is Rational or a polynomial
/// ring over Rational.
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0) {}

  explicit TruncatedSeries(int order) {
    if (order < 0) throw InsufficientOrder("negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, R(0));
  }

  /// Coefficients past `order` are dropped, missing ones are zero.
  TruncatedSeries(std::vector<R> coeffs, int order) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  TruncatedSeries(std::initializer_list<R> coeffs, int order)
      : TruncatedSeries(std::vector<R>(coeffs), order) {}

  static TruncatedSeries constant(R c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  /// The series z.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const R& operator[](int i) const {
    if (i < 0 || i > order()) {
      throw InsufficientOrder("coefficient " + std::to_string(i) + " requested from a series of order " +
                              std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(i)];
  }

  void set(int i, R value) {
    if (i < 0 || i > order()) throw InsufficientOrder("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(i)] = std::move(value);
  }

  const std::vector<R>& coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (int i = 0; i <= order(); ++i) {
      if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
    }
    return order() + 1;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order > order()) {
      throw InsufficientOrder("cannot extend a series of order " + std::to_string(order()) + " to " +
                              std::to_string(new_order));
    }
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
  }

  /// z^m * this, known through order()+m.
  TruncatedSeries shifted_up(int m) const {
    TruncatedSeries out(order() + m);
    for (int i = 0; i <= order(); ++i) out.coeffs_[static_cast<std::size_t>(i + m)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  /// this / z^m. The first m coefficients must vanish; the order drops by m.
  TruncatedSeries shifted_down(int m) const {
    if (m > order() + 1 || valuation() < m) {
      throw NonUnitDivisor("division by z^" + std::to_string(m) + " of a series with valuation " +
                           std::to_string(valuation()));
    }
    if (m == order() + 1) throw InsufficientOrder("division by z^m leaves no known coefficient");
    return TruncatedSeries(std::vector<R>(coeffs_.begin() + m, coeffs_.end()), order() - m);
  }

  TruncatedSeries derivative() const {
    if (order() == 0) throw InsufficientOrder("derivative of an order-0 series");
    TruncatedSeries out(order() - 1);
    for (int i = 1; i <= order(); ++i) out.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * Rational(i);
    return out;
  }

  /// Antiderivative with zero constant term.
  TruncatedSeries integral() const {
    TruncatedSeries out(order() + 1);
    for (int i = 0; i <= order(); ++i) {
      out.coeffs_[static_cast<std::size_t>(i + 1)] = coeffs_[static_cast<std::size_t>(i)] * make_rational(1, i + 1);
    }
    return out;
  }

  template <class F>
  auto map(F f) const {
    using Out = decltype(f(coeffs_[0]));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<Out>(std::move(out), order());
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c = R(c * q);
    return *this;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = R(a.coeffs_[i] + b.coeffs_[i]);
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = R(a.coeffs_[i] - b.coeffs_[i]);
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.coeffs_[i] = R(-a.coeffs_[i]);
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += R(a.coeffs_[i] * b.coeffs_[j]);
      }
    }
    return out;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& q) { return a *= q; }
  friend TruncatedSeries operator*(const Rational& q, TruncatedSeries a) { return a *= q; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (int i = 0; i <= s.order(); ++i) {
      if (is_zero(s.coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << s.coeffs_[i] << ")";
      if (i > 0) os << "*z^" << i;
    }
    if (first) os << "0";
    return os << " + O(z^" << s.order() + 1 << ")";
  }

 private:
  std::vector<R> coeffs_;
};

using Series = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<RationalPolynomial>;

/// Rational series viewed with polynomial coefficients.
inline PolySeries lift(const Series& s) {
  return s.map([](const Rational& c) { return RationalPolynomial(c); });
}

/// f(z * x_var): coefficient m becomes f_m x_var^m.
inline PolySeries substitute_scaled(const Series& f, std::size_t var) {
  PolySeries out(f.order());
  for (int m = 0; m <= f.order(); ++m) {
    out.set(m, RationalPolynomial::term(Monomial::variable(var, static_cast<unsigned>(m)), f[m]));
  }
  return out;
}

/// 1/a for a series whose constant term is a unit.
template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& a) {
  R c = detail::unit_inverse(a[0]);
  TruncatedSeries<R> b(a.order());
  b.set(0, c);
  for (int n = 1; n <= a.order(); ++n) {
    R acc(0);
    for (int j = 1; j <= n; ++j) {
      if (is_zero(a[j]) || is_zero(b[n - j])) continue;
      acc += R(a[j] * b[n - j]);
    }
    b.set(n, R(-(acc * c)));
  }
  return b;
}

/// a / b. When b(0) = 0, b has valuation m and a must have valuation >= m;
/// both are divided by z^m first, so the result order is min order - m.
template <class R>
TruncatedSeries<R> div(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  if (!is_zero(b[0])) return a * inverse(b);
  int m = b.valuation();
  if (m > b.order()) throw NonUnitDivisor("division by a series that vanishes to its truncation order");
  if (a.valuation() < m) {
    throw NonUnitDivisor("dividend valuation " + std::to_string(a.valuation()) + " below divisor valuation " +
                         std::to_string(m));
  }
  return div(a.shifted_down(m), b.shifted_down(m));
}

template <class R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& a) {
  if (!is_zero(a[0])) throw BadConstantTerm("exp needs a zero constant term, got " + detail::describe(a[0]));
  TruncatedSeries<R> b(a.order());
  b.set(0, R(1));
  for (int n = 1; n <= a.order(); ++n) {
    R acc(0);
    for (int j = 1; j <= n; ++j) {
      if (is_zero(a[j]) || is_zero(b[n - j])) continue;
      acc += R(a[j] * b[n - j]) * Rational(j);
    }
    b.set(n, R(acc * make_rational(1, n)));
  }
  return b;
}

template <class R>
TruncatedSeries<R> log_series(const TruncatedSeries<R>& a) {
  if (!detail::is_one(a[0])) throw BadConstantTerm("log needs constant term 1, got " + detail::describe(a[0]));
  TruncatedSeries<R> l(a.order());
  for (int n = 1; n <= a.order(); ++n) {
    R acc = R(a[n] * Rational(n));
    for (int j = 1; j < n; ++j) {
      if (is_zero(a[j]) || is_zero(l[n - j])) continue;
      acc -= R(a[j] * l[n - j]) * Rational(n - j);
    }
    l.set(n, R(acc * make_rational(1, n)));
  }
  return l;
}

/// a^e for a series with constant term 1 and a rational exponent.
template <class R>
TruncatedSeries<R> pow_rational(const TruncatedSeries<R>& a, const Rational& e) {
  if (!detail::is_one(a[0])) throw BadConstantTerm("pow needs constant term 1, got " + detail::describe(a[0]));
  TruncatedSeries<R> b(a.order());
  b.set(0, R(1));
  for (int n = 1; n <= a.order(); ++n) {
    R acc(0);
    for (int j = 1; j <= n; ++j) {
      if (is_zero(a[j]) || is_zero(b[n - j])) continue;
      Rational w = (e + 1) * j - n;
      if (is_zero(w)) continue;
      acc += R(a[j] * b[n - j]) * w;
    }
    b.set(n, R(acc * make_rational(1, n)));
  }
  return b;
}

/// outer(inner(z)) with inner(0) = 0, known through min of the two orders.
template <class R>
TruncatedSeries<R> compose(const Series& outer, const TruncatedSeries<R>& inner) {
  if (!is_zero(inner[0])) {
    throw BadConstantTerm("composition needs inner(0) = 0, got " + detail::describe(inner[0]));
  }
  int n = std::min(outer.order(), inner.order());
  TruncatedSeries<R> in = inner.truncated(n);
  TruncatedSeries<R> out = TruncatedSeries<R>::constant(R(outer[n]), n);
  for (int m = n - 1; m >= 0; --m) {
    out = out * in;
    out.set(0, R(out[0] + R(outer[m])));
  }
  return out;
}

/// Coefficients 0..order of a polynomial in z, as a series.
inline Series series_from(std::initializer_list<Rational> coeffs, int order) { return Series(coeffs, order); }

/// (1 + z)^e truncated at `order`.
inline Series binomial_series(const Rational& e, int order) {
  return pow_rational(Series({Rational(1), Rational(1)}, order), e);
}

}  // namespace rgasym
