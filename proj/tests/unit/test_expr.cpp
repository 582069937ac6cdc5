#include <gtest/gtest.h>

#include <cmath>

#include "ruled4/errors.hpp"
#include "ruled4/expr.hpp"

using namespace ruled4;
using K = Expr::Kind;

TEST(ExprParse, Shapes) {
  const Expr s = Expr::parse("sin(2*t)");
  EXPECT_EQ(s.kind(), K::Call);
  EXPECT_EQ(s.function(), Elementary::Sin);
  EXPECT_EQ(s.lhs().kind(), K::Mul);

  const Expr p = Expr::parse("t^4/4 + sqrt(2)");
  EXPECT_EQ(p.kind(), K::Add);
  EXPECT_EQ(p.lhs().kind(), K::Div);
  EXPECT_EQ(p.lhs().lhs().kind(), K::Pow);
  EXPECT_EQ(p.lhs().lhs().value(), 4.0);
  EXPECT_EQ(p.rhs().kind(), K::Call);
}

TEST(ExprParse, Precedence) {
  EXPECT_DOUBLE_EQ(Expr::parse("-t^2").evaluate(3.0), -9.0);
  EXPECT_DOUBLE_EQ(Expr::parse("2*3+4").evaluate(0.0), 10.0);
  EXPECT_DOUBLE_EQ(Expr::parse("2+3*4").evaluate(0.0), 14.0);
  EXPECT_DOUBLE_EQ(Expr::parse("8/4/2").evaluate(0.0), 1.0);
  EXPECT_DOUBLE_EQ(Expr::parse("1-2-3").evaluate(0.0), -4.0);
  EXPECT_DOUBLE_EQ(Expr::parse("t^(1/2)").evaluate(9.0), 3.0);
  EXPECT_DOUBLE_EQ(Expr::parse("t^-1").evaluate(4.0), 0.25);
  EXPECT_DOUBLE_EQ(Expr::parse("2*e").evaluate(0.0), 2.0 * std::exp(1.0));
  EXPECT_THROW(Expr::parse("2e"), SyntaxError);
  EXPECT_DOUBLE_EQ(Expr::parse("1.5e2").evaluate(0.0), 150.0);
  EXPECT_DOUBLE_EQ(Expr::parse("  cos( pi ) ").evaluate(0.0), -1.0);
}

TEST(ExprParse, Errors) {
  try {
    Expr::parse("sin(");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(Expr::parse(""), SyntaxError);
  EXPECT_THROW(Expr::parse("1 +"), SyntaxError);
  EXPECT_THROW(Expr::parse("(t"), SyntaxError);
  EXPECT_THROW(Expr::parse("t^t"), SyntaxError);
  EXPECT_THROW(Expr::parse("t t"), SyntaxError);
  EXPECT_THROW(Expr::parse("x + 1"), UnknownIdentifier);
  EXPECT_THROW(Expr::parse("tan(t)"), UnknownIdentifier);
}

TEST(ExprParse, RoundTrip) {
  for (const char* s : {"t^4/4 + sqrt(2)", "-cos(t)*cos(2*t)", "sin(2*t)*(sin(2*t)/2 - cos(t)^2)", "-(t-1)^(1/3)",
                        "exp(-t) / (1 + 0.1*t)", "pi - e", "1/sqrt(7)"}) {
    const Expr e = Expr::parse(s);
    const Expr back = Expr::parse(e.to_string());
    EXPECT_TRUE(back == e) << s << " -> " << e.to_string();
    EXPECT_EQ(back.to_string(), e.to_string());
  }
}

TEST(ExprFactories, BinaryRejectsNonBinaryKinds) {
  EXPECT_THROW(Expr::binary(K::Neg, Expr::number(1), Expr::number(2)), std::invalid_argument);
  const Expr e = Expr::binary(K::Sub, Expr::variable(), Expr::named_constant(K::Pi));
  EXPECT_DOUBLE_EQ(e.evaluate(1.0), 1.0 - M_PI);
}

TEST(ExprEval, DomainErrors) {
  EXPECT_THROW(Expr::parse("sqrt(t)").evaluate(-1.0), DomainError);
  EXPECT_THROW(Expr::parse("1/t").evaluate(0.0), DomainError);
  EXPECT_THROW(Expr::parse("t^(1/2)").evaluate(-4.0), DomainError);
}
