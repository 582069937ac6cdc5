#include "ruled4/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace ruled4 {
namespace {

constexpr std::array<std::pair<std::string_view, Elementary>, 6> kFunctions{{
    {"sin", Elementary::Sin},
    {"cos", Elementary::Cos},
    {"sinh", Elementary::Sinh},
    {"cosh", Elementary::Cosh},
    {"exp", Elementary::Exp},
    {"sqrt", Elementary::Sqrt},
}};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::negate(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    while (accept('^')) base = Expr::pow(base, parse_exponent());
    return base;
  }

  double parse_exponent() {
    if (accept('(')) {
      const double num = parse_signed_number();
      double den = 1.0;
      if (accept('/')) {
        den = parse_signed_number();
        if (den == 0.0) fail("zero denominator in exponent");
      }
      expect(')');
      return num / den;
    }
    return parse_signed_number();
  }

  double parse_signed_number() {
    const bool neg = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      fail("expected a numeric literal");
    }
    const double v = parse_number();
    return neg ? -v : v;
  }

  double parse_number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    }
    // An exponent part only when digits follow, so "2e" is not swallowed.
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t k = end + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
        end = k;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + end, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + end || !std::isfinite(v)) {
      fail("malformed number");
    }
    pos_ = end;
    return v;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Expr::number(parse_number());
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") return Expr::variable();
      if (name == "pi") return Expr::named_constant(Expr::Kind::Pi);
      if (name == "e") return Expr::named_constant(Expr::Kind::E);
      for (const auto& [fname, fn] : kFunctions) {
        if (name == fname) {
          expect('(');
          Expr arg = parse_expr();
          expect(')');
          return Expr::call(fn, arg);
        }
      }
      throw UnknownIdentifier(start, std::string(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view function_name(Elementary fn) {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

Expr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

Expr Expr::number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::variable() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  return Expr(std::move(n));
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  if (k != Kind::Add && k != Kind::Sub && k != Kind::Mul && k != Kind::Div) {
    throw std::invalid_argument("not a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Expr(std::move(n));
}

Expr Expr::named_constant(Kind k) {
  if (k != Kind::Pi && k != Kind::E) throw std::invalid_argument("not a named constant");
  auto n = std::make_shared<Node>();
  n->kind = k;
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->lhs = std::move(operand.node_);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, double exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->value = exponent;
  n->lhs = std::move(base.node_);
  return Expr(std::move(n));
}

Expr Expr::call(Elementary fn, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->fn = fn;
  n->lhs = std::move(arg.node_);
  return Expr(std::move(n));
}

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::Number: return format_number(value());
    case Kind::Variable: return "t";
    case Kind::Pi: return "pi";
    case Kind::E: return "e";
    case Kind::Add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::Sub: return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Kind::Mul: return "(" + lhs().to_string() + " * " + rhs().to_string() + ")";
    case Kind::Div: return "(" + lhs().to_string() + " / " + rhs().to_string() + ")";
    case Kind::Neg: return "(-" + lhs().to_string() + ")";
    case Kind::Pow: return "(" + lhs().to_string() + "^(" + format_number(value()) + "))";
    case Kind::Call: return std::string(function_name(function())) + "(" + lhs().to_string() + ")";
  }
  return {};
}

bool operator==(const Expr& a, const Expr& b) {
  const auto same = [](const std::shared_ptr<const Expr::Node>& x, const std::shared_ptr<const Expr::Node>& y) {
    if (!x || !y) return !x && !y;
    return Expr(x) == Expr(y);
  };
  if (a.node_ == b.node_) return true;
  const Expr::Node& x = *a.node_;
  const Expr::Node& y = *b.node_;
  if (x.kind != y.kind) return false;
  if ((x.kind == Expr::Kind::Number || x.kind == Expr::Kind::Pow) && x.value != y.value) return false;
  if (x.kind == Expr::Kind::Call && x.fn != y.fn) return false;
  return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
}

}  // namespace ruled4
