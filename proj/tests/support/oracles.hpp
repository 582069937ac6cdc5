#pragma once

// Random instance generators and independent numerical oracles shared by the
// unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ruled4/curve.hpp"
#include "ruled4/expr.hpp"
#include "ruled4/lorentz.hpp"
#include "ruled4/ruled.hpp"

namespace ruled4::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Vec4 random_vec(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale)};
}

// Literal for expression strings; negative values are parenthesized.
inline std::string lit(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, v < 0 ? "(%.17g)" : "%.17g", v);
  return buf;
}

// a0 + a1 t + a2 t^2 + a3 sin(k t) with small random coefficients.
inline std::string random_scalar(Rng& rng, double offset = 0.0, double amp = 1.0) {
  return lit(offset + uniform(rng, -amp, amp)) + " + " + lit(uniform(rng, -amp, amp)) + "*t + " +
         lit(uniform(rng, -amp, amp) / 2) + "*t^2 + " + lit(uniform(rng, -amp, amp) / 2) + "*sin(" +
         lit(uniform(rng, 0.5, 2.0)) + "*t)";
}

inline CurveSpec random_base_curve(Rng& rng) {
  std::array<std::string, 4> c;
  for (auto& s : c) s = random_scalar(rng, 0.0, 2.0);
  return CurveSpec::parse(c);
}

// A curve c(t) with <c,c> bounded away from zero, normalized to
// c / sqrt(|<c,c>|): spacelike unit for Type1, future timelike unit for Type2.
inline CurveSpec normalized_director(Rng& rng, SurfaceKind kind) {
  std::array<std::string, 4> raw;
  const int dominant = kind == SurfaceKind::Type2 ? 0 : static_cast<int>(1 + rng() % 3);
  // |t| <= 1 keeps the dominant slot above 1.5 and the others below 0.9
  // (Type1) or 0.45 (Type2), so the normalizer stays positive.
  const double minor_amp = kind == SurfaceKind::Type2 ? 0.15 : 0.3;
  for (int k = 0; k < 4; ++k) raw[k] = random_scalar(rng, k == dominant ? 3.0 : 0.0, k == dominant ? 0.5 : minor_amp);
  std::string q = "-(" + raw[0] + ")^2";
  for (int k = 1; k < 4; ++k) q += " + (" + raw[k] + ")^2";
  if (kind == SurfaceKind::Type2) q = "-(" + q + ")";
  std::array<std::string, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = "(" + raw[k] + ")/sqrt(" + q + ")";
  return CurveSpec::parse(c);
}

// Random rotation of the spatial slots 1..3.
inline Eigen::Matrix3d random_rotation(Rng& rng) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = uniform(rng, -1, 1);
  }
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
  return qr.householderQ();
}

// Orthogonal spacelike unit directors with constant <beta,gamma> = 0:
// beta = R (cos f, sin f, 0) in the spatial slots, gamma = (sinh g, R (0, 0, cosh g)).
inline std::pair<CurveSpec, CurveSpec> orthogonal_type1_directors(Rng& rng) {
  const Eigen::Matrix3d R = random_rotation(rng);
  const std::string f = "(" + lit(uniform(rng, -1, 1)) + " + " + lit(uniform(rng, -1, 1)) + "*t + " +
                        lit(uniform(rng, -0.5, 0.5)) + "*t^2)";
  const std::string g = "(" + lit(uniform(rng, -0.5, 0.5)) + " + " + lit(uniform(rng, -0.5, 0.5)) + "*t)";
  std::array<std::string, 4> beta{"0", "", "", ""};
  std::array<std::string, 4> gamma{"sinh(" + g + ")", "", "", ""};
  for (int k = 0; k < 3; ++k) {
    beta[k + 1] = lit(R(k, 0)) + "*cos(" + f + ") + " + lit(R(k, 1)) + "*sin(" + f + ")";
    gamma[k + 1] = lit(R(k, 2)) + "*cosh(" + g + ")";
  }
  return {CurveSpec::parse(beta), CurveSpec::parse(gamma)};
}

inline RuledHypersurface random_strict(Rng& rng, SurfaceKind kind, ParamBox box = {}) {
  return make_ruled(Curve(random_base_curve(rng)), Curve(normalized_director(rng, kind)),
                    Curve(normalized_director(rng, kind)), kind, true, box);
}

inline RuledHypersurface random_orthogonal_type1(Rng& rng, ParamBox box = {}) {
  auto [beta, gamma] = orthogonal_type1_directors(rng);
  return make_ruled(Curve(random_base_curve(rng)), Curve(beta), Curve(gamma), SurfaceKind::Type1, true, box);
}

// Determinant by the Leibniz permutation sum, rows a, b, c, d.
inline double det4_leibniz(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  std::array<int, 4> p{0, 1, 2, 3};
  double sum = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    }
    const double term = a[p[0]] * b[p[1]] * c[p[2]] * d[p[3]];
    sum += (inversions % 2 ? -term : term);
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

inline double max_abs(const Vec4& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(v[3])});
}

// Central differences of a long-double evaluation of e at t.
struct FdDerivs {
  long double d1;
  long double d2;
};

inline FdDerivs finite_differences(const Expr& e, double t, long double h = 1e-5L) {
  const long double tt = t;
  const long double fp = e.evaluate<long double>(tt + h);
  const long double f0 = e.evaluate<long double>(tt);
  const long double fm = e.evaluate<long double>(tt - h);
  return {(fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h)};
}

// (1/sqrt|G|) d_i (sqrt|G| G^ij d_j phi) with every derivative, including the
// tangent vectors, taken by central differences of eval_point. G is the
// actual Lorentzian Gram matrix of the differenced tangents.
inline Vec4 laplace_beltrami_fd(const RuledHypersurface& h, double x, double y, double z, double step = 1e-4) {
  using P3 = std::array<double, 3>;
  const auto tangents = [&](const P3& p) {
    std::array<Vec4, 3> t;
    for (int i = 0; i < 3; ++i) {
      P3 a = p, b = p;
      a[i] += step;
      b[i] -= step;
      t[i] = (eval_point(h, a[0], a[1], a[2]) - eval_point(h, b[0], b[1], b[2])) / (2 * step);
    }
    return t;
  };
  const auto gram = [&](const std::array<Vec4, 3>& t) {
    Eigen::Matrix3d g;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g(i, j) = lorentz_dot(t[i], t[j]);
    }
    return g;
  };
  const auto flux = [&](const P3& p, int i) {
    const auto t = tangents(p);
    const Eigen::Matrix3d g = gram(t);
    const Eigen::Matrix3d gi = g.inverse();
    const double root = std::sqrt(std::abs(g.determinant()));
    Vec4 f;
    for (int j = 0; j < 3; ++j) f += root * gi(i, j) * t[j];
    return f;
  };
  const P3 p0{x, y, z};
  Vec4 div;
  for (int i = 0; i < 3; ++i) {
    P3 a = p0, b = p0;
    a[i] += step;
    b[i] -= step;
    div += (flux(a, i) - flux(b, i)) / (2 * step);
  }
  return div / std::sqrt(std::abs(gram(tangents(p0)).determinant()));
}

// Richardson extrapolation of the above over steps h and h/2 (fourth order).
inline Vec4 laplace_beltrami_fd_richardson(const RuledHypersurface& h, double x, double y, double z, double step = 2e-4) {
  return (4.0 * laplace_beltrami_fd(h, x, y, z, step / 2) - laplace_beltrami_fd(h, x, y, z, step)) / 3.0;
}

// A strict random instance and a point at which the metric is well
// conditioned (|det g| >= 0.05), so the operator stays bounded there.
struct BoundedPoint {
  RuledHypersurface h;
  std::array<double, 3> p;
};

inline BoundedPoint bounded_lb_instance(Rng& rng, SurfaceKind kind) {
  for (;;) {
    RuledHypersurface h = random_strict(rng, kind);
    const std::array<double, 3> p{uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8)};
    if (std::abs(first_form(h, p[0], p[1], p[2]).detg) >= 0.05) return {std::move(h), p};
  }
}

// Grid of 27 points of the box (3 per axis).
inline std::vector<std::array<double, 3>> grid27(const ParamBox& box) {
  std::vector<std::array<double, 3>> pts;
  const Interval xs{box.x.lo, box.x.hi, 3}, ys{box.y.lo, box.y.hi, 3}, zs{box.z.lo, box.z.hi, 3};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) pts.push_back({xs.at(i), ys.at(j), zs.at(k)});
    }
  }
  return pts;
}

}  // namespace ruled4::testing
