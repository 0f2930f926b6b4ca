#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rgasym/rational.hpp"

namespace rgasym {

/// Monomial over at most kMaxVariables variables, stored as a dense exponent
/// vector. Absent variables have exponent 0.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 24;
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t var, unsigned exponent = 1) {
    Monomial m;
    m.set(var, exponent);
    return m;
  }

  Exponent exponent(std::size_t var) const { return var < kMaxVariables ? exps_[var] : 0; }

  void set(std::size_t var, unsigned exponent) {
    if (var >= kMaxVariables) throw Error("variable index out of range: " + std::to_string(var));
    if (exponent > 0xffffu) throw Error("monomial exponent overflow");
    exps_[var] = static_cast<Exponent>(exponent);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  /// sum over j of weight(j) * e_j.
  template <class Weight>
  long weighted_degree(Weight weight) const {
    long d = 0;
    for (std::size_t v = 0; v < kMaxVariables; ++v) d += static_cast<long>(weight(v)) * exps_[v];
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// (variable, exponent) pairs with nonzero exponent, in variable order.
  std::vector<std::pair<std::size_t, unsigned>> support() const {
    std::vector<std::pair<std::size_t, unsigned>> out;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (exps_[v] != 0) out.emplace_back(v, exps_[v]);
    }
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      unsigned e = unsigned(a.exps_[v]) + b.exps_[v];
      if (e > 0xffffu) throw Error("monomial exponent overflow");
      m.exps_[v] = static_cast<Exponent>(e);
    }
    return m;
  }

  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::array<Exponent, kMaxVariables> exps_;
};

/// Sparse multivariate polynomial: Monomial -> nonzero coefficient.
/// C is Rational or GaussianRational.
template <class C>
class Polynomial {
 public:
  using Terms = std::map<Monomial, C>;

  Polynomial() = default;
  Polynomial(long c) : Polynomial(C(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const C& c) {                   // NOLINT(google-explicit-constructor)
    if (!rgasym::is_zero(c)) terms_.emplace(Monomial(), c);
  }

  static Polynomial variable(std::size_t var, unsigned exponent = 1) {
    return term(Monomial::variable(var, exponent), C(1));
  }

  static Polynomial term(const Monomial& m, const C& c) {
    Polynomial p;
    if (!rgasym::is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  C constant_term() const { return coefficient(Monomial()); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  void add_term(const Monomial& m, const C& c) {
    if (rgasym::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (rgasym::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
    return *this;
  }
  Polynomial& operator*=(const Rational& q) {
    if (rgasym::is_zero(q)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= q;
    }
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = C(-c);
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& q) { return a *= q; }
  friend Polynomial operator*(const Rational& q, Polynomial a) { return a *= q; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, C(ca * cb));
    }
    return out;
  }

  /// Keeps only terms accepted by the predicate on their monomial.
  template <class Pred>
  Polynomial filtered(Pred keep) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (keep(m)) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// p(v) + p(-v): doubles the part even in `var` and drops the odd part.
  Polynomial sign_symmetrized(std::size_t var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.exponent(var) % 2 == 0) out.terms_.emplace(m, C(c * Rational(2)));
    }
    return out;
  }

  /// Replaces var^(2e) by square^e. Every exponent of var must be even.
  Polynomial substitute_square(std::size_t var, const Rational& square) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      unsigned e = m.exponent(var);
      if (e % 2 != 0) throw InternalAssertion("odd power left before square substitution");
      Monomial reduced = m;
      reduced.set(var, 0);
      out.add_term(reduced, C(c * pow(square, static_cast<long>(e / 2))));
    }
    return out;
  }

  /// Substitutes var := value everywhere.
  Polynomial evaluate(std::size_t var, const Rational& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      unsigned e = m.exponent(var);
      Monomial reduced = m;
      reduced.set(var, 0);
      out.add_term(reduced, C(c * pow(value, static_cast<long>(e))));
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (auto [v, e] : m.support()) {
        os << "*x" << v;
        if (e != 1) os << "^" << e;
      }
    }
    return os;
  }

 private:
  Terms terms_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using RationalPolynomial = Polynomial<Rational>;
using GaussianPolynomial = Polynomial<GaussianRational>;

/// Weights for the Gaussian-moment evaluation, indexed by variable.
using MomentWeights = std::map<std::size_t, Rational>;

/// Exponential Hadamard product against exp(sum_j alpha_j x_j^2 / 2),
/// evaluated at x = 1. Each monomial prod x_j^{e_j} maps to
/// prod alpha_j^{e_j/2} (e_j - 1)!! when every e_j is even, and to 0 otherwise.
/// Weights may be negative: this is the formal moment rule.
template <class C>
C gaussian_hadamard(const Polynomial<C>& p, const MomentWeights& alphas) {
  C total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational factor(1);
    bool odd = false;
    for (auto [var, e] : m.support()) {
      auto it = alphas.find(var);
      if (it == alphas.end()) throw MissingWeight("no moment weight for variable " + std::to_string(var));
      if (e % 2 != 0) {
        odd = true;
        continue;
      }
      factor *= pow(it->second, static_cast<long>(e / 2)) * Rational(double_factorial(static_cast<long>(e) - 1));
    }
    if (!odd) total += C(c * factor);
  }
  return total;
}

}  // namespace rgasym
