#pragma once

#include <cmath>

#include "ruled4/errors.hpp"
#include "ruled4/lorentz.hpp"

namespace ruled4 {

// a + eps a*, with eps^2 = 0.
struct Dual {
  double re = 0.0;
  double eps = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double r, double e = 0.0) : re(r), eps(e) {}  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Dual&, const Dual&) = default;
};

inline Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.eps + b.eps}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.eps - b.eps}; }
inline Dual operator-(const Dual& a) { return {-a.re, -a.eps}; }
inline Dual operator*(const Dual& a, const Dual& b) { return {a.re * b.re, a.eps * b.re + a.re * b.eps}; }
inline Dual operator/(const Dual& a, const Dual& b) {
  if (b.re == 0.0) throw DomainError("division by zero");
  return {a.re / b.re, (a.eps * b.re - a.re * b.eps) / (b.re * b.re)};
}

// Value, first and second derivative of a function of one variable at a
// point: a second-order truncated Taylor expansion.
struct Jet2 {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double v, double first = 0.0, double second = 0.0)  // NOLINT(google-explicit-constructor)
      : f(v), d1(first), d2(second) {}

  static constexpr Jet2 variable(double t) { return {t, 1.0, 0.0}; }

  friend bool operator==(const Jet2&, const Jet2&) = default;
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.d1, -a.d2}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f * b.f, a.d1 * b.f + a.f * b.d1, a.d2 * b.f + 2.0 * (a.d1 * b.d1) + a.f * b.d2};
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.f == 0.0) throw DomainError("division by zero");
  const double q = a.f / b.f;
  const double q1 = (a.d1 * b.f - a.f * b.d1) / (b.f * b.f);
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.f;
  return {q, q1, q2};
}

enum class Elementary { Sin, Cos, Sinh, Cosh, Exp, Sqrt };

// g(v), g'(v), g''(v); derivatives are only formed when requested, so a
// constant argument never trips a derivative singularity.
struct Taylor2 {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

Taylor2 taylor(Elementary fn, double v, bool need_g1, bool need_g2);
Taylor2 taylor_pow(double v, double exponent, bool need_g1, bool need_g2);

inline Dual compose(const Taylor2& g, const Dual& a) { return {g.g0, g.g1 * a.eps}; }
inline Jet2 compose(const Taylor2& g, const Jet2& a) {
  return {g.g0, g.g1 * a.d1, g.g2 * (a.d1 * a.d1) + g.g1 * a.d2};
}

// Uniform scalar interface used by the expression evaluator.
inline double apply(Elementary fn, double v) { return taylor(fn, v, false, false).g0; }
inline long double apply(Elementary fn, long double v) {
  switch (fn) {
    case Elementary::Sin: return std::sin(v);
    case Elementary::Cos: return std::cos(v);
    case Elementary::Sinh: return std::sinh(v);
    case Elementary::Cosh: return std::cosh(v);
    case Elementary::Exp: return std::exp(v);
    case Elementary::Sqrt:
      if (v < 0) throw DomainError("sqrt of a negative value");
      return std::sqrt(v);
  }
  return v;
}
inline Dual apply(Elementary fn, const Dual& a) { return compose(taylor(fn, a.re, a.eps != 0.0, false), a); }
inline Jet2 apply(Elementary fn, const Jet2& a) {
  return compose(taylor(fn, a.f, a.d1 != 0.0 || a.d2 != 0.0, a.d1 != 0.0), a);
}

inline double power(double v, double p) { return taylor_pow(v, p, false, false).g0; }
long double power(long double v, double p);
inline Dual power(const Dual& a, double p) { return compose(taylor_pow(a.re, p, a.eps != 0.0, false), a); }
inline Jet2 power(const Jet2& a, double p) {
  return compose(taylor_pow(a.f, p, a.d1 != 0.0 || a.d2 != 0.0, a.d1 != 0.0), a);
}

inline double divide(double a, double b) {
  if (b == 0.0) throw DomainError("division by zero");
  return a / b;
}
inline long double divide(long double a, long double b) {
  if (b == 0.0L) throw DomainError("division by zero");
  return a / b;
}
inline Dual divide(const Dual& a, const Dual& b) { return a / b; }
inline Jet2 divide(const Jet2& a, const Jet2& b) { return a / b; }

// Dual 4-vectors a + eps a*.
struct DualVec4 {
  Vec4 re;
  Vec4 eps;
  friend bool operator==(const DualVec4&, const DualVec4&) = default;
};

// Which quadratic form the dual norm and hypothesis checks use.
enum class InnerProduct { Lorentz, Euclid };

InnerProduct parse_inner_product(std::string_view name);
std::string_view to_string(InnerProduct ip);
double inner(const Vec4& a, const Vec4& b, InnerProduct ip);

// <A,B>_D = <a,b> + eps(<a,b*> + <a*,b>)
Dual dual_dot(const DualVec4& a, const DualVec4& b, InnerProduct ip = InnerProduct::Lorentz);
// A x_D B x_D I = a x b x I + eps(a x b* x I + a* x b x I)
DualVec4 dual_cross(const DualVec4& a, const DualVec4& b, const Vec4& unit_i);
// N_A = |a|^2 + 2 eps <a,a*>; in Lorentz mode |a|^2 = |<a,a>|.
Dual dual_norm(const DualVec4& a, InnerProduct ip = InnerProduct::Lorentz);
// Membership in the unit dual sphere: N_A = 1 + 0 eps within 1e-9.
bool on_unit_dual_sphere(const DualVec4& a, InnerProduct ip = InnerProduct::Lorentz);

struct DualVectorAlgebra {
  Dual dot;
  DualVec4 cross;
  Dual norm_a;
  bool is_unit = false;
};

DualVectorAlgebra dual_vector_algebra(const DualVec4& a, const DualVec4& b, const Vec4& unit_i,
                                      InnerProduct ip = InnerProduct::Lorentz);

}  // namespace ruled4
