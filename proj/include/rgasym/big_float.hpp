#pragma once

// clang-format off
#include <cstdarg>
#include <cstdio>
#include <gmp.h>
#include <mpfr.h>
// clang-format on

#include <algorithm>
#include <string>
#include <utility>

#include "rgasym/rational.hpp"

namespace rgasym {

/// Owning RAII handle for an MPFR value. Results of binary operations take
/// the larger of the operand precisions; rounding is to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 256) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
  }
  BigFloat(long v, mpfr_prec_t precision) : BigFloat(precision) { mpfr_set_si(value_, v, MPFR_RNDN); }
  BigFloat(const Integer& v, mpfr_prec_t precision) : BigFloat(precision) {
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const Rational& v, mpfr_prec_t precision) : BigFloat(precision) {
    mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) : BigFloat(o.precision()) { mpfr_set(value_, o.value_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(o.precision()) { mpfr_swap(value_, o.value_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(value_, o.precision());
      mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  /// Exact value as a rational (finite values only).
  Rational to_rational() const {
    if (!mpfr_number_p(value_)) throw Error("non-finite value has no rational form");
    if (is_zero()) return 0;
    Integer m;
    long e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
    Rational out(m);
    if (e >= 0) {
      mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
      mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return out;
  }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat out(a.precision());
    mpfr_neg(out.value_, a.value_, MPFR_RNDN);
    return out;
  }

  friend BigFloat log(const BigFloat& a) { return unary(a, mpfr_log); }
  friend BigFloat exp(const BigFloat& a) { return unary(a, mpfr_exp); }
  friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
  friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }

  friend BigFloat pow(const BigFloat& a, long e) {
    BigFloat out(a.precision());
    mpfr_pow_si(out.value_, a.value_, e, MPFR_RNDN);
    return out;
  }

  static BigFloat pi(mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

  /// Decimal string with `digits` significant digits.
  std::string to_string(int digits = 40) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Fixed-point string with `decimals` digits after the point; ties go to
  /// the even last digit.
  std::string to_fixed_half_even(int decimals) const {
    BigFloat scaled(precision());
    mpfr_mul_ui(scaled.value_, value_, pow10(decimals), MPFR_RNDN);
    mpfr_rint(scaled.value_, scaled.value_, MPFR_RNDN);
    Integer units;
    mpfr_get_z(units.get_mpz_t(), scaled.value_, MPFR_RNDN);
    bool negative = units < 0;
    if (negative) units = -units;
    std::string digits = units.get_str();
    if (decimals > 0) {
      if (digits.size() <= static_cast<std::size_t>(decimals)) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
      }
      digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    return (negative ? "-" : "") + digits;
  }

 private:
  template <class Op>
  static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
    BigFloat out(std::max(a.precision(), b.precision()));
    op(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
  }
  template <class Op>
  static BigFloat unary(const BigFloat& a, Op op) {
    BigFloat out(a.precision());
    op(out.value_, a.value_, MPFR_RNDN);
    return out;
  }
  static unsigned long pow10(int e) {
    unsigned long out = 1;
    for (int i = 0; i < e; ++i) out *= 10;
    return out;
  }

  mpfr_t value_;
};

}  // namespace rgasym
