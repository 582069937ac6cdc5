#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ruled4/dual.hpp"

namespace ruled4 {

// Immutable expression tree over the single variable t.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' literal)*
//   literal := ['-'] number | '(' ['-'] number ['/' number] ')'
//   primary := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | sinh | cosh | exp | sqrt
class Expr {
 public:
  enum class Kind { Number, Variable, Pi, E, Add, Sub, Mul, Div, Neg, Pow, Call };

  static Expr parse(std::string_view text);

  static Expr number(double v);
  static Expr variable();
  static Expr named_constant(Kind k);  // Pi or E
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr negate(Expr operand);
  static Expr pow(Expr base, double exponent);
  static Expr call(Elementary fn, Expr arg);

  Kind kind() const { return node_->kind; }
  // Literal value for Number, the exponent for Pow.
  double value() const { return node_->value; }
  Elementary function() const { return node_->fn; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  // Fully parenthesized form that parses back to an identical tree.
  std::string to_string() const;

  template <class T>
  T evaluate(const T& t) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind = Kind::Number;
    double value = 0.0;
    Elementary fn = Elementary::Sin;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

std::string_view function_name(Elementary fn);

template <class T>
T Expr::evaluate(const T& t) const {
  switch (kind()) {
    case Kind::Number: return T(value());
    case Kind::Variable: return t;
    case Kind::Pi: return T(3.141592653589793238462643383279502884L);
    case Kind::E: return T(2.718281828459045235360287471352662498L);
    case Kind::Add: return lhs().evaluate(t) + rhs().evaluate(t);
    case Kind::Sub: return lhs().evaluate(t) - rhs().evaluate(t);
    case Kind::Mul: return lhs().evaluate(t) * rhs().evaluate(t);
    case Kind::Div: return divide(lhs().evaluate(t), rhs().evaluate(t));
    case Kind::Neg: return -lhs().evaluate(t);
    case Kind::Pow: return power(lhs().evaluate(t), value());
    case Kind::Call: return apply(function(), lhs().evaluate(t));
  }
  return T(0.0);
}

// Value and first two derivatives of e at t.
inline Jet2 jet_eval(const Expr& e, double t) { return e.evaluate(Jet2::variable(t)); }
// Forward-mode evaluation over t + eps.
inline Dual dual_eval(const Expr& e, double t) { return e.evaluate(Dual(t, 1.0)); }

}  // namespace ruled4
