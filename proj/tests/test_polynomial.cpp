#include <gtest/gtest.h>

#include <random>

#include "rgasym/polynomial.hpp"
#include "test_support.hpp"

namespace rgasym {
namespace {

using testing::q;

RationalPolynomial x(std::size_t var, unsigned e = 1) { return RationalPolynomial::variable(var, e); }

TEST(DoubleFactorial, Values) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(9), 945);
}

TEST(DoubleFactorial, MatchesFactorialQuotient) {
  // (2n-1)!! = (2n)! / (2^n n!)
  for (long n = 0; n <= 15; ++n) {
    Integer quotient = factorial(2 * n) / (Integer(1) << static_cast<mp_bitcnt_t>(n)) / factorial(n);
    EXPECT_EQ(double_factorial(2 * n - 1), quotient) << n;
  }
}

TEST(DoubleFactorial, RejectsEvenOrTooSmall) {
  EXPECT_THROW(double_factorial(4), BadParity);
  EXPECT_THROW(double_factorial(-3), BadParity);
}

TEST(RationalText, RoundTrip) {
  EXPECT_EQ(to_string(q(-71, 18)), "-71/18");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(GaussianRational, RingAndConjugation) {
  GaussianRational a(q(1, 2), q(3));
  GaussianRational b(q(-2), q(1, 3));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  for (long e = 0; e < 8; ++e) {
    GaussianRational direct(1);
    for (long i = 0; i < e; ++i) direct *= -GaussianRational::i();
    EXPECT_EQ(minus_i_power(e), direct);
  }
}

TEST(Polynomial, ArithmeticCancels) {
  RationalPolynomial p = x(1) + x(2) * q(2);
  RationalPolynomial diff = p * p - (x(1, 2) + x(1) * x(2) * q(4) + x(2, 2) * q(4));
  EXPECT_TRUE(diff.is_zero());
}

TEST(Polynomial, SignSymmetrizationAndSquareSubstitution) {
  // f(u) = 1 + u + 3u^2 ; f(u) + f(-u) = 2 + 6u^2 ; with u^2 = 1/5 -> 2 + 6/5.
  RationalPolynomial f = RationalPolynomial(q(1)) + x(0) + x(0, 2) * q(3);
  RationalPolynomial even = f.sign_symmetrized(0);
  EXPECT_EQ(even, RationalPolynomial(q(2)) + x(0, 2) * q(6));
  EXPECT_EQ(even.substitute_square(0, q(1, 5)), RationalPolynomial(q(16, 5)));
  EXPECT_THROW(f.substitute_square(0, q(1, 5)), InternalAssertion);
}

TEST(GaussianHadamard, SecondMoment) {
  EXPECT_EQ(gaussian_hadamard(x(1, 2), {{1, q(1)}}), q(1));
}

TEST(GaussianHadamard, FourthMoment) {
  EXPECT_EQ(gaussian_hadamard(x(1, 4), {{1, q(1)}}), q(3));
}

TEST(GaussianHadamard, ProductOfNegativeWeights) {
  RationalPolynomial p = x(1, 2) * x(2, 2);
  EXPECT_EQ(gaussian_hadamard(p, {{1, q(-1, 2)}, {2, q(-1, 4)}}), q(1, 8));
}

TEST(GaussianHadamard, OddMonomialsVanish) {
  EXPECT_EQ(gaussian_hadamard(x(1, 3) * x(2, 2), {{1, q(2)}, {2, q(3)}}), q(0));
}

TEST(GaussianHadamard, MissingWeight) {
  EXPECT_THROW(gaussian_hadamard(x(3, 2), {{1, q(1)}}), MissingWeight);
}

RationalPolynomial random_poly(std::mt19937& rng, std::vector<std::size_t> vars, int terms) {
  std::uniform_int_distribution<int> exp(0, 4);
  RationalPolynomial p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (auto v : vars) m.set(v, static_cast<unsigned>(exp(rng)));
    p.add_term(m, testing::random_rational(rng));
  }
  return p;
}

TEST(GaussianHadamard, LinearAndMultiplicativeOverDisjointVariables) {
  std::mt19937 rng(3);
  MomentWeights w{{1, q(-1, 3)}, {2, q(2)}, {3, q(5, 7)}};
  for (int trial = 0; trial < 20; ++trial) {
    RationalPolynomial a = random_poly(rng, {1}, 4);
    RationalPolynomial b = random_poly(rng, {2, 3}, 5);
    RationalPolynomial c = random_poly(rng, {1, 2}, 5);
    Rational lambda = testing::random_rational(rng);
    EXPECT_EQ(gaussian_hadamard(a * lambda + c, w), lambda * gaussian_hadamard(a, w) + gaussian_hadamard(c, w));
    EXPECT_EQ(gaussian_hadamard(a * b, w), gaussian_hadamard(a, w) * gaussian_hadamard(b, w));
  }
}

TEST(GaussianHadamard, GaussianCoefficients) {
  GaussianPolynomial p = GaussianPolynomial::term(Monomial::variable(1, 2), GaussianRational(q(0), q(1)));
  GaussianRational v = gaussian_hadamard(p, {{1, q(1, 2)}});
  EXPECT_EQ(v, GaussianRational(q(0), q(1, 2)));
}

}  // namespace
}  // namespace rgasym
