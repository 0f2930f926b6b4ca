#include <gtest/gtest.h>

#include <cmath>

#include "rgasym/exact_counts.hpp"
#include "rgasym/regular_expansion.hpp"
#include "rgasym/validation.hpp"
#include "test_support.hpp"

using namespace rgasym;
using rgasym::testing::q;

namespace {

RationalPolynomial t(int j) { return RationalPolynomial::variable(t_var(j)); }

Monomial mono(std::initializer_list<std::pair<std::size_t, unsigned>> exps) {
  Monomial m;
  for (auto [v, e] : exps) m.set(v, e);
  return m;
}

/// B_{0,j} written with k!/(k-m)! and an explicit indicator m <= k.
RationalPolynomial b0_row_indicator(int j, RegularContext& ctx) {
  const int k = ctx.k();
  RationalPolynomial out;
  for (int l = 1; l <= j; ++l) {
    for (int a = 0; a <= l; ++a) {
      for (int b = 0; a + b + l <= j; ++b) {
        const int m = a + b + l;
        if (m > k) continue;
        Rational c = Rational(factorial(k)) / Rational(factorial(k - m)) * pow(q(k - 1, 2), a) /
                     Rational(factorial(a) * factorial(b)) * ctx.u(j - m, 3 * a + b + l);
        RationalPolynomial term = RationalPolynomial::term(mono({{kVarU, unsigned(m)}, {t_var(1), unsigned(j - m)}}), c);
        out += term * ctx.v(l - a, b);
      }
    }
  }
  return out;
}

}  // namespace

TEST(UPQ, Examples) {
  Series psi = regular_psi(8);
  EXPECT_EQ(u_pq(0, 5, psi), 1);
  EXPECT_EQ(u_pq(1, 2, psi), -2);
  EXPECT_EQ(u_pq(1, 2, psi, URoute::lagrange), -2);
  for (int qq = 0; qq <= 6; ++qq) EXPECT_EQ(u_pq(0, qq, psi, URoute::lagrange), 1);
}

TEST(UPQ, FirstOrderIsMinusQ) {
  Series psi = regular_psi(4);
  for (int qq = 0; qq <= 8; ++qq) EXPECT_EQ(u_pq(1, qq, psi), Rational(-qq));
}

TEST(UPQ, NewtonEqualsLagrange) {
  Series psi = regular_psi(8);
  for (int p = 0; p <= 6; ++p) {
    for (int qq = 0; qq <= 6; ++qq) {
      EXPECT_EQ(u_pq(p, qq, psi, URoute::newton), u_pq(p, qq, psi, URoute::lagrange)) << "p=" << p << " q=" << qq;
    }
  }
}

TEST(UPQ, AgreesWithIterationOracle) {
  Series psi = regular_psi(6);
  auto tree = rgasym::testing::tree_by_iteration(psi.coefficients(), 6);
  // (1 + T)^(-2) by naive composition.
  auto outer = rgasym::testing::naive_compose(binomial_series(Rational(-2), 6).coefficients(), tree, 6);
  for (int p = 0; p <= 6; ++p) EXPECT_EQ(u_pq(p, 2, psi), outer[static_cast<std::size_t>(p)]) << p;
}

TEST(UPQ, ContextCacheMatchesFreeFunction) {
  RegularContext ctx(3, 4);
  for (int p = 0; p <= 5; ++p) {
    for (int qq = 0; qq <= 5; ++qq) EXPECT_EQ(ctx.u(p, qq), u_pq(p, qq, ctx.psi()));
  }
}

TEST(UPQ, Errors) {
  Series psi = regular_psi(2);
  EXPECT_THROW(u_pq(5, 1, psi), InsufficientOrder);
  EXPECT_THROW(u_pq(-1, 1, psi), Error);
}

TEST(VPQ, Examples) {
  EXPECT_TRUE(v_pq(1, 0).is_zero());
  EXPECT_EQ(v_pq(2, 0), RationalPolynomial(q(1, 2)));
  EXPECT_EQ(v_pq(1, 1), t(2));
  EXPECT_EQ(v_pq(0, 0), RationalPolynomial(1));
  EXPECT_TRUE(v_pq(0, 1).is_zero());
  // [z^2] (t2 z + t3 z^2)^1 (1 + z^2/2) = t3
  EXPECT_EQ(v_pq(2, 1), t(3));
  // [z^3] (t2 z + t3 z^2 + t4 z^3)(1 + z^2/2) = t4 + t2/2
  EXPECT_EQ(v_pq(3, 1), t(4) + t(2) * q(1, 2));
  // [z^2] (t2 z + ...)^2 = t2^2
  EXPECT_EQ(v_pq(2, 2), t(2) * t(2));
}

TEST(VPQ, OddEvenStructure) {
  // (1 - z^2)^(-1/2) is even, so v_{p,0} vanishes for odd p and equals C(2m, m)/4^m for p = 2m.
  for (int m = 0; m <= 5; ++m) {
    EXPECT_TRUE(v_pq(2 * m + 1, 0).is_zero());
    Rational expect = Rational(factorial(2 * m)) / Rational(factorial(m) * factorial(m)) / pow(Rational(4), m);
    EXPECT_EQ(v_pq(2 * m, 0), RationalPolynomial(expect));
  }
}

TEST(B0Row, FirstRowVanishes) {
  for (int k = 2; k <= 8; ++k) {
    RegularContext ctx(k, 2);
    EXPECT_TRUE(b0_row(1, ctx).is_zero()) << k;
  }
}

TEST(B0Row, SecondRowTerm) {
  for (int k = 2; k <= 8; ++k) {
    RegularContext ctx(k, 2);
    RationalPolynomial b = b0_row(2, ctx);
    EXPECT_EQ(b.coefficient(mono({{kVarU, 2}, {t_var(2), 1}})), Rational(k * (k - 1))) << k;
  }
}

TEST(B0Row, FallingFactorialVanishesPastK) {
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(falling_factorial(3, 3), 6);
  EXPECT_EQ(falling_factorial(5, 2), 20);
}

TEST(B0Row, FallingFactorialEqualsIndicatorForm) {
  for (int k = 2; k <= 8; ++k) {
    RegularContext ctx(k, 4);
    for (int j = 1; j <= 6; ++j) EXPECT_EQ(b0_row(j, ctx), b0_row_indicator(j, ctx)) << "k=" << k << " j=" << j;
  }
}

TEST(C2, OnlyEvenPowersOfUBeforeSubstitution) {
  RegularContext ctx(3, 4);
  PolySeries c1 = c1_series(ctx);
  for (int m = 0; m <= c1.order(); ++m) {
    RationalPolynomial even = c1[m].sign_symmetrized(kVarU);
    for (const auto& [mon, c] : even.terms()) EXPECT_EQ(mon.exponent(kVarU) % 2, 0u);
  }
}

TEST(C2, ConstantTermIsTwo) {
  for (int k = 2; k <= 6; ++k) {
    RegularContext ctx(k, 0);
    PolySeries c2 = c2_series(ctx);
    EXPECT_EQ(c2[0], RationalPolynomial(2)) << k;
  }
}

TEST(C2, OddPowersOfSHaveZeroMoment) {
  for (int k : {3, 4}) {
    RegularContext ctx(k, 5);
    PolySeries c2 = c2_series(ctx);
    MomentWeights w = regular_weights(k, 8);
    for (int m = 1; m <= 5; m += 2) EXPECT_EQ(gaussian_hadamard(c2[m], w), 0) << "k=" << k << " m=" << m;
  }
}

TEST(SGTilde, Goldens) {
  EXPECT_EQ(sg_tilde_series(3, 2), (std::vector<Rational>{2, q(-71, 18), q(-143, 1296)}));
  EXPECT_EQ(sg_tilde_series(4, 2), (std::vector<Rational>{2, q(-235, 24), q(18289, 2304)}));
  EXPECT_EQ(sg_tilde_series(5, 2), (std::vector<Rational>{2, q(-589, 30), q(190249, 3600)}));
  EXPECT_EQ(sg_tilde_coeff(3, 1), q(-71, 18));
  EXPECT_EQ(sg_tilde_coeff(4, 2), q(18289, 2304));
  EXPECT_EQ(sg_tilde_coeff(5, 2), q(190249, 3600));
}

TEST(SGTilde, ThirdCoefficients) {
  EXPECT_EQ(sg_tilde_coeff(3, 3), q(2337053, 699840));
  EXPECT_EQ(sg_tilde_coeff(4, 3), q(22776313, 1658880));
  EXPECT_EQ(sg_tilde_coeff(5, 3), q(19063687, 3240000));
}

TEST(SGTilde, TwoRegularGoldens) {
  std::vector<Rational> sg = sg_tilde_series(2, 4);
  EXPECT_EQ(sg, (std::vector<Rational>{2, q(-13, 12), q(-47, 576), q(170383, 207360), q(35430149, 19906560)}));
}

// Exact 2-regular counts from the cycle formula: the scaled remainder after
// four terms approaches [z^4].
TEST(SGTilde, TwoRegularAgainstCycleCounts) {
  std::vector<Rational> sg = sg_tilde_series(2, 4);
  for (int n : {400, 800}) {
    BigFloat res = residual(2, n, 4, count_two_regular(n), sg, 512);
    double err = std::fabs(res.to_double() - sg[4].get_d());
    EXPECT_LT(err, 8.0 / n) << n;
  }
}

TEST(SGTilde, LeadingCoefficientIsTwo) {
  for (int k = 2; k <= 12; ++k) EXPECT_EQ(sg_tilde_series(k, 0), std::vector<Rational>{2}) << k;
}

TEST(SGTilde, PerCoefficientEqualsSinglePass) {
  for (int k : {2, 3, 4, 5, 6}) {
    auto all = sg_tilde_series(k, 3);
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(sg_tilde_coeff(k, r), all[static_cast<std::size_t>(r)]) << k << " " << r;
  }
}

TEST(SGTilde, ExpansionRecord) {
  Expansion e = sg_expansion(3, 2);
  EXPECT_EQ(e.k, 3);
  EXPECT_EQ(e.alpha, q(3, 2));
  EXPECT_EQ(e.coeffs.size(), 3u);
}

TEST(SGTilde, RejectsSmallK) {
  EXPECT_THROW(sg_tilde_series(1, 1), Error);
  EXPECT_THROW(sg_tilde_series(3, -1), Error);
}

TEST(FormalK, OrderZero) {
  FormalKPolynomial p = formal_k_interpolate(0);
  EXPECT_EQ(p.numerator, std::vector<Rational>{2});
}

TEST(FormalK, OrderOne) {
  FormalKPolynomial p = formal_k_interpolate(1);
  // -(k^4 - 2k^2 + 3k - 1)/6
  std::vector<Rational> expect{q(1, 6), q(-3, 6), q(2, 6), 0, q(-1, 6)};
  EXPECT_EQ(p.numerator, expect);
}

TEST(FormalK, OrderTwo) {
  FormalKPolynomial p = formal_k_interpolate(2);
  std::vector<long> num{-71, 234, -239, 36, 50, 6, -16, 0, 1};
  std::vector<Rational> expect;
  for (long c : num) expect.push_back(q(c, 144));
  EXPECT_EQ(p.numerator, expect);
}

TEST(FormalK, OrderThree) {
  FormalKPolynomial p = formal_k_interpolate(3);
  std::vector<long> num{-74237, 291285, -406785, 212175, -3627, -8550, -13525, 0, 2421, 45, -210, 0, 5};
  std::vector<Rational> expect;
  for (long c : num) expect.push_back(q(-c, 25920));
  EXPECT_EQ(p.numerator, expect);
}

TEST(FormalK, PolynomialReproducesSmallK) {
  for (int r = 1; r <= 2; ++r) {
    FormalKPolynomial p = formal_k_interpolate(r);
    for (int k = 2; k <= 5; ++k) EXPECT_EQ(p.evaluate(Rational(k)), sg_tilde_coeff(k, r)) << r << " " << k;
  }
}

TEST(FormalK, DegreeOverflow) {
  // k^3 sampled with too few points.
  auto cubic = [](int k) -> Rational { return Rational(k) * k * k; };
  EXPECT_THROW(formal_k_interpolate(0, cubic, 1, 3), DegreeOverflow);
  FormalKPolynomial ok = formal_k_interpolate(0, cubic, 1, 4);
  EXPECT_EQ(ok.numerator, (std::vector<Rational>{0, 0, 0, 1}));
}

TEST(FormalK, LagrangeInterpolation) {
  std::vector<Rational> xs{0, 1, 2};
  std::vector<Rational> ys{1, 2, 5};  // 1 + x^2
  EXPECT_EQ(lagrange_interpolate(xs, ys), (std::vector<Rational>{1, 0, 1}));
}

TEST(Psi, DisplayedFormula) {
  const int n = 8;
  Series tt = Series::variable(n + 2);
  Series inner = -log_series(Series::constant(Rational(1), n + 2) + tt) + tt - tt * tt * q(1, 2);
  Series ratio = inner.shifted_down(2);
  Series expect = pow_rational(Series::constant(Rational(1), n) + ratio.truncated(n), q(-1, 2));
  EXPECT_EQ(regular_psi(n).coefficients(), expect.coefficients());
}
