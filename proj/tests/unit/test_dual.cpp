#include <gtest/gtest.h>

#include <cmath>

#include "ruled4/dual.hpp"
#include "ruled4/expr.hpp"
#include "support/oracles.hpp"

using namespace ruled4;
using namespace ruled4::testing;

TEST(Dual, Examples) {
  EXPECT_EQ(Dual(0, 1) * Dual(0, 1), Dual(0, 0));
  EXPECT_EQ(Dual(1, 2) * Dual(3, 4), Dual(3, 10));
  EXPECT_EQ(Dual(1, 1) + Dual(2, 3), Dual(3, 4));
  EXPECT_EQ(Dual(6, 1) / Dual(2, 0), Dual(3, 0.5));
  EXPECT_THROW(Dual(1, 1) / Dual(0, 1), DomainError);
}

TEST(Dual, EpsilonSquaredVanishesForAnyScale) {
  Rng rng(31);
  for (int n = 0; n < 100; ++n) {
    const double e = uniform(rng, -1e3, 1e3);
    EXPECT_EQ((Dual(0, e) * Dual(0, e)), Dual(0, 0));
  }
}

TEST(Jet2, ProductAndQuotientRules) {
  const Jet2 t = Jet2::variable(3.0);
  const Jet2 sq = t * t;
  EXPECT_EQ(sq, Jet2(9, 6, 2));
  const Jet2 inv = Jet2(1.0) / t;  // 1/t: (1/3, -1/9, 2/27)
  EXPECT_DOUBLE_EQ(inv.f, 1.0 / 3);
  EXPECT_DOUBLE_EQ(inv.d1, -1.0 / 9);
  EXPECT_DOUBLE_EQ(inv.d2, 2.0 / 27);
}

TEST(Taylor, DomainChecks) {
  EXPECT_THROW(taylor(Elementary::Sqrt, -1.0, false, false), DomainError);
  EXPECT_THROW(taylor(Elementary::Sqrt, 0.0, true, false), DomainError);
  EXPECT_NO_THROW(taylor(Elementary::Sqrt, 0.0, false, false));
  EXPECT_THROW(taylor_pow(-2.0, 0.5, false, false), DomainError);
  EXPECT_THROW(taylor_pow(0.0, -1.0, false, false), DomainError);
  EXPECT_NO_THROW(taylor_pow(-2.0, 3.0, true, true));
  EXPECT_THROW(taylor(Elementary::Exp, 1000.0, false, false), DomainError);
}

TEST(Taylor, ConstantSqrtOfZeroHasNoDerivativeSingularity) {
  const Jet2 j = jet_eval(Expr::parse("sqrt(0) + t"), 1.0);
  EXPECT_EQ(j, Jet2(1, 1, 0));
}

TEST(JetEval, Examples) {
  EXPECT_EQ(jet_eval(Expr::parse("t^2"), 3.0), Jet2(9, 6, 2));
  EXPECT_EQ(jet_eval(Expr::parse("sin(t)"), 0.0), Jet2(0, 1, 0));
  const Jet2 e1 = jet_eval(Expr::parse("t^4/4 + sqrt(2)"), 1.0);
  EXPECT_DOUBLE_EQ(e1.f, 0.25 + std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(e1.d1, 1.0);
  EXPECT_DOUBLE_EQ(e1.d2, 3.0);
}

TEST(JetEval, MatchesFiniteDifferences) {
  const Expr e = Expr::parse("cos(t)*sin(2*t)");
  const double t = M_PI / 4;
  const Jet2 j = jet_eval(e, t);
  const FdDerivs fd = finite_differences(e, t);
  EXPECT_LE(rel_err(j.d1, static_cast<double>(fd.d1)), 1e-6);
  EXPECT_LE(rel_err(j.d2, static_cast<double>(fd.d2)), 1e-6);
}

TEST(JetEval, DualEpsilonEqualsJetFirstDerivative) {
  const char* exprs[] = {"cos(t)*sin(2*t)", "t^4/4 + sqrt(2)", "exp(-t^2)/(1+t^2)", "sqrt(2+sinh(t))*cosh(t)",
                         "(t^2 + 1)^(1/3)", "pi*t - e"};
  for (const char* s : exprs) {
    const Expr e = Expr::parse(s);
    for (double t : {-0.7, 0.3, 1.1}) {
      EXPECT_EQ(dual_eval(e, t).eps, jet_eval(e, t).d1) << s << " at " << t;
      EXPECT_EQ(dual_eval(e, t).re, jet_eval(e, t).f) << s << " at " << t;
    }
  }
}

TEST(DualVectors, Examples) {
  const Vec4 I{0, 0, 0, 1};
  const DualVec4 a{{0, 1, 0, 0}, {0, 0, 1, 0}};
  const auto alg = dual_vector_algebra(a, a, I);
  EXPECT_EQ(alg.norm_a, Dual(1, 0));
  EXPECT_TRUE(alg.is_unit);

  const DualVec4 real_only{{1, 2, 3, 4}, {}};
  EXPECT_EQ(dual_cross(real_only, real_only, I), DualVec4{});

  const DualVec4 x{{0, 1, 0, 0}, {}}, y{{0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(dual_dot(x, y), Dual(0, 0));
}

TEST(DualVectors, DotAndCrossFollowTheEpsilonRule) {
  Rng rng(32);
  const Vec4 I{0, 0, 0, 1};
  for (int n = 0; n < 100; ++n) {
    const DualVec4 a{random_vec(rng), random_vec(rng)}, b{random_vec(rng), random_vec(rng)};
    const Dual d = dual_dot(a, b);
    EXPECT_DOUBLE_EQ(d.re, lorentz_dot(a.re, b.re));
    EXPECT_NEAR(d.eps, lorentz_dot(a.re, b.eps) + lorentz_dot(a.eps, b.re), 1e-14);
    const DualVec4 c = dual_cross(a, b, I);
    EXPECT_EQ(c.re, cross4(a.re, b.re, I));
    EXPECT_LE(max_abs(c.eps - (cross4(a.re, b.eps, I) + cross4(a.eps, b.re, I))), 1e-14);
  }
}

TEST(DualVectors, NormModes) {
  const DualVec4 timelike{{1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(dual_norm(timelike, InnerProduct::Lorentz), Dual(1, 0));
  EXPECT_TRUE(on_unit_dual_sphere(timelike, InnerProduct::Lorentz));
  const DualVec4 off{{0, 0, 2, 0}, {0, 0, 1, 0}};
  EXPECT_EQ(dual_norm(off, InnerProduct::Euclid), Dual(4, 4));
  EXPECT_FALSE(on_unit_dual_sphere(off, InnerProduct::Euclid));
  EXPECT_EQ(parse_inner_product("euclid"), InnerProduct::Euclid);
  EXPECT_THROW(parse_inner_product("minkowski"), std::invalid_argument);
}
