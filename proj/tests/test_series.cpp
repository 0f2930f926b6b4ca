#include <gtest/gtest.h>

#include "rgasym/series.hpp"
#include "test_support.hpp"

namespace rgasym {
namespace {

using testing::q;

Series poly(std::initializer_list<Rational> c, int order) { return Series(c, order); }

TEST(SeriesArithmetic, DifferenceOfSquares) {
  Series a = poly({q(1), q(1)}, 3);
  Series b = poly({q(1), q(-1)}, 3);
  EXPECT_EQ(a * b, poly({q(1), q(0), q(-1)}, 3));
}

TEST(SeriesArithmetic, ProductKeepsOrder) {
  Series z = Series::variable(2);
  Series sq = z * z;
  EXPECT_EQ(sq.order(), 2);
  EXPECT_EQ(sq, poly({q(0), q(0), q(1)}, 2));
}

TEST(SeriesArithmetic, SumTakesMinimumOrder) {
  Series sum = poly({q(1), q(1), q(1)}, 2) + poly({q(1), q(-1)}, 5);
  EXPECT_EQ(sum.order(), 2);
  EXPECT_EQ(sum, poly({q(2), q(0), q(1)}, 2));
}

TEST(SeriesArithmetic, ValuationOfZeroSeriesIsOrderPlusOne) {
  EXPECT_EQ(Series(4).valuation(), 5);
  EXPECT_EQ(poly({q(0), q(0), q(3)}, 4).valuation(), 2);
}

TEST(SeriesArithmetic, CoefficientBeyondOrderIsUnknown) {
  Series s = poly({q(1)}, 2);
  EXPECT_THROW((void)s[3], InsufficientOrder);
}

TEST(SeriesDivision, GeometricSeries) {
  Series one = Series::constant(q(1), 4);
  EXPECT_EQ(div(one, poly({q(1), q(-1)}, 4)), poly({q(1), q(1), q(1), q(1), q(1)}, 4));
}

TEST(SeriesDivision, ValuationShift) {
  Series a = poly({q(0), q(0), q(1), q(1)}, 3);
  Series b = poly({q(0), q(0), q(1)}, 3);
  Series c = div(a, b);
  EXPECT_EQ(c.order(), 1);
  EXPECT_EQ(c, poly({q(1), q(1)}, 1));
}

TEST(SeriesDivision, LongDivisionOracle) {
  // 2z^3 / (1 + z): long division gives 2z^3 - 2z^4 + ...
  Series c = div(poly({q(0), q(0), q(0), q(2)}, 4), poly({q(1), q(1)}, 4));
  EXPECT_EQ(c, poly({q(0), q(0), q(0), q(2), q(-2)}, 4));
}

TEST(SeriesDivision, NonUnitDivisorRejected) {
  EXPECT_THROW(div(poly({q(1)}, 3), Series::variable(3)), NonUnitDivisor);
  EXPECT_THROW(div(Series::variable(3), Series(3)), NonUnitDivisor);
}

TEST(SeriesTranscendental, Exp) {
  EXPECT_EQ(exp_series(Series::variable(3)), poly({q(1), q(1), q(1, 2), q(1, 6)}, 3));
}

TEST(SeriesTranscendental, Log) {
  EXPECT_EQ(log_series(poly({q(1), q(1)}, 3)), poly({q(0), q(1), q(-1, 2), q(1, 3)}, 3));
}

TEST(SeriesTranscendental, PowMatchesBinomialOracle) {
  Series s = pow_rational(poly({q(1), q(0), q(-1)}, 4), q(-1, 2));
  EXPECT_EQ(s, poly({q(1), q(0), q(1, 2), q(0), q(3, 8)}, 4));
  // (1 - z^2)^(-1/2) = sum C(-1/2, m) (-1)^m z^(2m).
  Series longer = pow_rational(poly({q(1), q(0), q(-1)}, 16), q(-1, 2));
  for (int m = 0; m <= 8; ++m) {
    Rational sign = (m % 2 == 0) ? q(1) : q(-1);
    EXPECT_EQ(longer[2 * m], testing::gen_binomial(q(-1, 2), m) * sign) << "m=" << m;
    if (2 * m + 1 <= 16) {
      EXPECT_EQ(longer[2 * m + 1], q(0));
    }
  }
}

TEST(SeriesTranscendental, BadConstantTerms) {
  EXPECT_THROW(exp_series(poly({q(1), q(1)}, 2)), BadConstantTerm);
  EXPECT_THROW(log_series(poly({q(2), q(1)}, 2)), BadConstantTerm);
  EXPECT_THROW(pow_rational(poly({q(0), q(1)}, 2), q(1, 2)), BadConstantTerm);
  try {
    log_series(poly({q(3, 2)}, 2));
    FAIL() << "expected BadConstantTerm";
  } catch (const BadConstantTerm& e) {
    EXPECT_NE(std::string(e.what()).find("3/2"), std::string::npos);
  }
}

TEST(SeriesCompose, Simple) {
  Series outer = poly({q(1), q(1)}, 3);
  Series inner = poly({q(0), q(2)}, 3);
  EXPECT_EQ(compose(outer, inner), poly({q(1), q(2)}, 3));
}

TEST(SeriesCompose, LogOfShiftedGeometric) {
  // log(1 + z/(1-z)) = -log(1 - z) = z + z^2/2 + z^3/3.
  Series outer = poly({q(0), q(1), q(-1, 2), q(1, 3)}, 3);
  Series inner = div(Series::variable(3), poly({q(1), q(-1)}, 3));
  EXPECT_EQ(compose(outer, inner), poly({q(0), q(1), q(1, 2), q(1, 3)}, 3));
}

TEST(SeriesCompose, ExpOfZero) {
  Series e = exp_series(Series::variable(4));
  EXPECT_EQ(compose(e, Series(4)), Series::constant(q(1), 4));
}

TEST(SeriesCompose, InnerMustVanishAtZero) {
  EXPECT_THROW(compose(Series::variable(2), poly({q(1), q(1)}, 2)), BadConstantTerm);
}

TEST(SeriesCompose, MatchesNaiveExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Series outer = testing::random_series(rng, 6, testing::random_rational(rng));
    Series inner = testing::random_series(rng, 6, q(0));
    auto expect = testing::naive_compose(outer.coefficients(), inner.coefficients(), 6);
    EXPECT_EQ(compose(outer, inner), Series(expect, 6));
  }
}

// Algebraic laws on random inputs.

TEST(SeriesProperties, ExpIsAMorphism) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = testing::random_series(rng, 7, q(0));
    Series b = testing::random_series(rng, 5, q(0));
    EXPECT_EQ(exp_series(a + b), exp_series(a) * exp_series(b));
  }
}

TEST(SeriesProperties, LogInvertsExp) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = testing::random_series(rng, 8, q(0));
    EXPECT_EQ(log_series(exp_series(a)), a);
  }
}

TEST(SeriesProperties, PowersAdd) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = testing::random_series(rng, 7, q(1));
    Rational p = testing::random_rational(rng, 5, 4);
    Rational r = testing::random_rational(rng, 5, 4);
    EXPECT_EQ(pow_rational(a, p) * pow_rational(a, r), pow_rational(a, p + r));
  }
}

TEST(SeriesProperties, MinusOnePowerIsReciprocal) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = testing::random_series(rng, 7, q(1));
    EXPECT_EQ(pow_rational(a, q(-1)), div(Series::constant(q(1), 7), a));
  }
}

TEST(SeriesProperties, IntegerPowerMatchesRepeatedProduct) {
  std::mt19937 rng(15);
  Series a = testing::random_series(rng, 6, q(1));
  EXPECT_EQ(pow_rational(a, q(3)), a * a * a);
}

TEST(SeriesCalculus, DerivativeAndIntegral) {
  Series s = poly({q(5), q(1), q(3)}, 2);
  EXPECT_EQ(s.derivative(), poly({q(1), q(6)}, 1));
  EXPECT_EQ(s.derivative().integral(), poly({q(0), q(1), q(3)}, 2));
}

TEST(PolySeries, LiftAndScaledSubstitution) {
  Series f = poly({q(1), q(2), q(3)}, 2);
  PolySeries g = substitute_scaled(f, 1);
  EXPECT_EQ(g[2], RationalPolynomial::term(Monomial::variable(1, 2), q(3)));
  EXPECT_EQ(lift(f)[1], RationalPolynomial(q(2)));
}

TEST(PolySeries, ExpLogRoundTripWithPolynomialCoefficients) {
  PolySeries a(4);
  a.set(1, RationalPolynomial::variable(1));
  a.set(2, RationalPolynomial::variable(2) * q(1, 3) + RationalPolynomial(q(2)));
  a.set(3, RationalPolynomial::variable(1) * RationalPolynomial::variable(2));
  EXPECT_EQ(log_series(exp_series(a)), a);
}

}  // namespace
}  // namespace rgasym
