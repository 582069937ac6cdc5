#include "ruled4/dual.hpp"

#include <cmath>
#include <string>

namespace ruled4 {
namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
  return v;
}

bool is_integer(double p) { return std::floor(p) == p; }

}  // namespace

Taylor2 taylor(Elementary fn, double v, bool need_g1, bool need_g2) {
  Taylor2 t;
  switch (fn) {
    case Elementary::Sin:
      t.g0 = std::sin(v);
      if (need_g1) t.g1 = std::cos(v);
      if (need_g2) t.g2 = -t.g0;
      break;
    case Elementary::Cos:
      t.g0 = std::cos(v);
      if (need_g1) t.g1 = -std::sin(v);
      if (need_g2) t.g2 = -t.g0;
      break;
    case Elementary::Sinh:
      t.g0 = std::sinh(v);
      if (need_g1) t.g1 = std::cosh(v);
      if (need_g2) t.g2 = t.g0;
      break;
    case Elementary::Cosh:
      t.g0 = std::cosh(v);
      if (need_g1) t.g1 = std::sinh(v);
      if (need_g2) t.g2 = t.g0;
      break;
    case Elementary::Exp:
      t.g0 = std::exp(v);
      t.g1 = t.g0;
      t.g2 = t.g0;
      break;
    case Elementary::Sqrt:
      if (v < 0) throw DomainError("sqrt of a negative value");
      t.g0 = std::sqrt(v);
      if (need_g1) {
        if (v == 0) throw DomainError("sqrt is not differentiable at 0");
        t.g1 = 0.5 / t.g0;
      }
      if (need_g2) t.g2 = -0.5 * t.g1 / v;
      break;
  }
  checked(t.g0, "function value");
  return t;
}

Taylor2 taylor_pow(double v, double p, bool need_g1, bool need_g2) {
  if (v < 0 && !is_integer(p)) throw DomainError("non-integer power of a negative value");
  if (v == 0 && p < 0) throw DomainError("negative power of zero");
  Taylor2 t;
  t.g0 = checked(std::pow(v, p), "power");
  if (need_g1) {
    t.g1 = p == 0 ? 0.0 : checked(p * std::pow(v, p - 1), "power derivative");
  }
  if (need_g2) {
    const double c = p * (p - 1);
    t.g2 = c == 0 ? 0.0 : checked(c * std::pow(v, p - 2), "power second derivative");
  }
  return t;
}

long double power(long double v, double p) {
  if (v < 0 && !is_integer(p)) throw DomainError("non-integer power of a negative value");
  if (v == 0 && p < 0) throw DomainError("negative power of zero");
  return std::pow(v, static_cast<long double>(p));
}

InnerProduct parse_inner_product(std::string_view name) {
  if (name == "lorentz") return InnerProduct::Lorentz;
  if (name == "euclid") return InnerProduct::Euclid;
  throw std::invalid_argument("inner product must be 'lorentz' or 'euclid'");
}

std::string_view to_string(InnerProduct ip) {
  return ip == InnerProduct::Lorentz ? "lorentz" : "euclid";
}

double inner(const Vec4& a, const Vec4& b, InnerProduct ip) {
  return ip == InnerProduct::Lorentz ? lorentz_dot(a, b) : euclid_dot(a, b);
}

Dual dual_dot(const DualVec4& a, const DualVec4& b, InnerProduct ip) {
  return {inner(a.re, b.re, ip), inner(a.re, b.eps, ip) + inner(a.eps, b.re, ip)};
}

DualVec4 dual_cross(const DualVec4& a, const DualVec4& b, const Vec4& unit_i) {
  return {cross4(a.re, b.re, unit_i), cross4(a.re, b.eps, unit_i) + cross4(a.eps, b.re, unit_i)};
}

Dual dual_norm(const DualVec4& a, InnerProduct ip) {
  return {std::abs(inner(a.re, a.re, ip)), 2.0 * inner(a.re, a.eps, ip)};
}

bool on_unit_dual_sphere(const DualVec4& a, InnerProduct ip) {
  const Dual n = dual_norm(a, ip);
  return std::abs(n.re - 1.0) <= kMembershipTol && std::abs(n.eps) <= kMembershipTol;
}

DualVectorAlgebra dual_vector_algebra(const DualVec4& a, const DualVec4& b, const Vec4& unit_i,
                                      InnerProduct ip) {
  return {dual_dot(a, b, ip), dual_cross(a, b, unit_i), dual_norm(a, ip), on_unit_dual_sphere(a, ip)};
}

}  // namespace ruled4
