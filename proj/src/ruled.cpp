#include "ruled4/ruled.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ruled4/errors.hpp"

namespace ruled4 {
namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kOrthogonalTol = 1e-9;

double dot(const Vec4& a, const Vec4& b) { return lorentz_dot(a, b); }

std::string describe(const char* name, const DirectorReport& r) {
  std::ostringstream out;
  out << name << " violates " << to_string(r.constraint) << ": max |<c,c> - target| = " << r.max_violation
      << " (<c,c> = " << r.worst_quadratic << " at t = " << r.worst_t << ")";
  if (!r.sign_ok) out << "; slot-0 sign condition fails";
  return out.str();
}

// Explicit cofactor expansion: every term of det h picks up one of the
// structural zeros of the second fundamental form, so det h is exactly 0.
double det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Vec4 combine(const std::array<double, 3>& w, const std::array<Vec4, 3>& v) {
  return w[0] * v[0] + w[1] * v[1] + w[2] * v[2];
}

}  // namespace

std::string_view to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Type1: return "type1";
    case SurfaceKind::Type2: return "type2";
    case SurfaceKind::Unconstrained: return "unconstrained";
  }
  return "?";
}

RuledHypersurface::RuledHypersurface(Curve alpha, Curve beta, Curve gamma, SurfaceKind kind, ParamBox box)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), kind_(kind), box_(box) {}

RuledHypersurface make_ruled(Curve alpha, Curve beta, Curve gamma, SurfaceKind kind, bool strict, ParamBox box) {
  RuledHypersurface h(std::move(alpha), std::move(beta), std::move(gamma), kind, box);
  if (kind == SurfaceKind::Unconstrained) return h;

  const ModelSpace space = kind == SurfaceKind::Type1 ? ModelSpace::DeSitter3 : ModelSpace::Hyperbolic3;
  const Interval samples{box.x.lo, box.x.hi, std::max(box.x.n, 65)};
  const DirectorReport rb = validate_director(h.beta(), space, samples);
  const DirectorReport rg = validate_director(h.gamma(), space, samples);
  std::vector<std::string> problems;
  if (!rb.pass) problems.push_back(describe("beta", rb));
  if (!rg.pass) problems.push_back(describe("gamma", rg));
  if (strict && !problems.empty()) {
    std::string msg = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
    throw DirectorConstraintViolated(msg);
  }
  for (auto& p : problems) h.add_warning(std::move(p));
  return h;
}

Frame frame(const RuledHypersurface& h, double x, double y, double z) {
  const CurveJet a = h.alpha()(x);
  const CurveJet b = h.beta()(x);
  const CurveJet g = h.gamma()(x);
  Frame f;
  f.phi = a.p + y * b.p + z * g.p;
  f.phi_x = a.d1 + y * b.d1 + z * g.d1;
  f.phi_y = b.p;
  f.phi_z = g.p;
  f.phi_xx = a.d2 + y * b.d2 + z * g.d2;
  f.phi_xy = b.d1;
  f.phi_xz = g.d1;
  return f;
}

Vec4 eval_point(const RuledHypersurface& h, double x, double y, double z) {
  return h.alpha()(x).p + y * h.beta()(x).p + z * h.gamma()(x).p;
}

GaussMapData gauss_map(const Frame& f) {
  GaussMapData gm;
  gm.n_raw = cross4(f.phi_x, f.phi_y, f.phi_z);
  const double euclid2 = euclid_dot(gm.n_raw, gm.n_raw);
  const double q = dot(gm.n_raw, gm.n_raw);
  gm.d = std::sqrt(std::abs(q));
  if (std::sqrt(euclid2) <= kSingularTol || gm.d <= kSingularTol || std::abs(q) <= 1e-10 * euclid2) {
    throw DegenerateNormal("normal vector vanishes or is lightlike; the Gauss map is undefined");
  }
  gm.g = gm.n_raw / gm.d;
  gm.normal_character = q > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
  return gm;
}

GaussMapData gauss_map(const RuledHypersurface& h, double x, double y, double z) {
  return gauss_map(frame(h, x, y, z));
}

MetricData first_form(const Frame& f, SurfaceKind kind) {
  MetricData m;
  const std::array<Vec4, 3> d{f.phi_x, f.phi_y, f.phi_z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.gram(i, j) = dot(d[i], d[j]);
  }
  m.a = m.gram(0, 0);
  m.b = m.gram(0, 1);
  m.c = m.gram(0, 2);
  m.e = m.gram(1, 2);
  switch (kind) {
    case SurfaceKind::Type1: m.g22 = m.g33 = 1.0; break;
    case SurfaceKind::Type2: m.g22 = m.g33 = -1.0; break;
    case SurfaceKind::Unconstrained:
      m.g22 = m.gram(1, 1);
      m.g33 = m.gram(2, 2);
      break;
  }
  m.g << m.a, m.b, m.c,  //
      m.b, m.g22, m.e,   //
      m.c, m.e, m.g33;
  m.detg = det3(m.g);

  const double a = m.a, b = m.b, c = m.c, e = m.e;
  switch (kind) {
    case SurfaceKind::Type1: m.detg_closed = -b * b + 2 * c * b * e - c * c - a * e * e + a; break;
    case SurfaceKind::Type2: m.detg_closed = b * b + 2 * c * b * e + c * c - a * e * e + a; break;
    case SurfaceKind::Unconstrained: {
      const double p = m.g22, q = m.g33;
      m.detg_closed = a * (p * q - e * e) - b * (b * q - c * e) + c * (b * e - c * p);
      break;
    }
  }
  return m;
}

MetricData first_form(const RuledHypersurface& h, double x, double y, double z) {
  return first_form(frame(h, x, y, z), h.kind());
}

Mat3 metric_adjugate(const MetricData& m, SurfaceKind kind) {
  const double a = m.a, b = m.b, c = m.c, e = m.e;
  Mat3 adj;
  switch (kind) {
    case SurfaceKind::Type1:
      adj << 1 - e * e, c * e - b, b * e - c,  //
          c * e - b, a - c * c, b * c - a * e,  //
          b * e - c, b * c - a * e, a - b * b;
      break;
    case SurfaceKind::Type2:
      adj << 1 - e * e, c * e + b, b * e + c,   //
          c * e + b, -a - c * c, b * c - a * e,  //
          b * e + c, b * c - a * e, -a - b * b;
      break;
    case SurfaceKind::Unconstrained: {
      const double p = m.g22, q = m.g33;
      adj << p * q - e * e, c * e - b * q, b * e - c * p,  //
          c * e - b * q, a * q - c * c, b * c - a * e,      //
          b * e - c * p, b * c - a * e, a * p - b * b;
      break;
    }
  }
  return adj;
}

Mat3 inverse_metric(const MetricData& m, SurfaceKind kind) {
  if (std::abs(m.detg) <= kSingularTol) throw SingularMetric("first fundamental form is singular");
  return metric_adjugate(m, kind) / m.detg;
}

Mat3 second_form(const Frame& f, const GaussMapData& gm) {
  Mat3 h = Mat3::Zero();
  h(0, 0) = dot(f.phi_xx, gm.g);
  h(0, 1) = h(1, 0) = dot(f.phi_xy, gm.g);
  h(0, 2) = h(2, 0) = dot(f.phi_xz, gm.g);
  return h;
}

Mat3 second_form(const RuledHypersurface& h, double x, double y, double z) {
  const Frame f = frame(h, x, y, z);
  return second_form(f, gauss_map(f));
}

MinimalityResidual minimality_residual(const Frame& f, const GaussMapData& gm, const MetricData& m,
                                       SurfaceKind kind) {
  const double n11 = dot(f.phi_xx, gm.n_raw);
  const double n12 = dot(f.phi_xy, gm.n_raw);
  const double n13 = dot(f.phi_xz, gm.n_raw);
  const Mat3 adj = metric_adjugate(m, kind);

  MinimalityResidual r;
  r.value = adj(0, 0) * n11 + adj(0, 1) * n12 + adj(0, 2) * n13 + adj(0, 1) * n12 + adj(0, 2) * n13;
  if (std::abs(m.e) <= kOrthogonalTol) {
    MetricData orth = m;
    orth.e = 0.0;
    const Mat3 o = metric_adjugate(orth, kind);
    r.orthogonal = o(0, 0) * n11 + o(0, 1) * n12 + o(0, 2) * n13 + o(0, 1) * n12 + o(0, 2) * n13;
  }
  return r;
}

MinimalityResidual minimality_residual(const RuledHypersurface& h, double x, double y, double z) {
  const Frame f = frame(h, x, y, z);
  return minimality_residual(f, gauss_map(f), first_form(f, h.kind()), h.kind());
}

LaplaceBeltramiPaths laplace_beltrami_paths(const Frame& f, const MetricData& m, SurfaceKind kind) {
  if (std::abs(m.detg) <= kSingularTol) throw SingularMetric("first fundamental form is singular");

  const Vec4& px = f.phi_x;
  const Vec4& beta = f.phi_y;
  const Vec4& gamma = f.phi_z;
  const Vec4& pxx = f.phi_xx;
  const Vec4& bp = f.phi_xy;
  const Vec4& gp = f.phi_xz;

  // Partial derivatives of a, b, c, e (and of the diagonal when it is not
  // fixed by the kind) along x, y, z.
  const std::array<double, 3> da{2 * dot(px, pxx), 2 * dot(px, bp), 2 * dot(px, gp)};
  const std::array<double, 3> db{dot(bp, px) + dot(beta, pxx), dot(beta, bp), dot(beta, gp)};
  const std::array<double, 3> dc{dot(gp, px) + dot(gamma, pxx), dot(gamma, bp), dot(gamma, gp)};
  const std::array<double, 3> de{dot(bp, gamma) + dot(beta, gp), 0.0, 0.0};
  const bool free_diag = kind == SurfaceKind::Unconstrained;
  const std::array<double, 3> dp{free_diag ? 2 * dot(beta, bp) : 0.0, 0.0, 0.0};
  const std::array<double, 3> dq{free_diag ? 2 * dot(gamma, gp) : 0.0, 0.0, 0.0};

  std::array<Mat3, 3> dg;
  for (int k = 0; k < 3; ++k) {
    dg[k] << da[k], db[k], dc[k],  //
        db[k], dp[k], de[k],       //
        dc[k], de[k], dq[k];
  }

  const Mat3 ginv = m.g.inverse();
  const std::array<Vec4, 3> d1{px, beta, gamma};
  // Second derivatives phi_ij; phi_yy = phi_yz = phi_zz = 0.
  const Vec4 zero;
  const std::array<std::array<Vec4, 3>, 3> d2{{{pxx, bp, gp}, {bp, zero, zero}, {gp, zero, zero}}};

  Vec4 lap;
  for (int i = 0; i < 3; ++i) {
    const Mat3 dginv = -ginv * dg[i] * ginv;
    const double dlog = 0.5 * (ginv * dg[i]).trace();
    for (int j = 0; j < 3; ++j) {
      lap += (dlog * ginv(i, j) + dginv(i, j)) * d1[j] + ginv(i, j) * d2[i][j];
    }
  }

  LaplaceBeltramiPaths out;
  out.general = lap;

  if (kind == SurfaceKind::Unconstrained || std::abs(m.e) > kOrthogonalTol || std::abs(de[0]) > kOrthogonalTol) {
    return out;
  }

  // Orthogonal directors: g = [[a,b,c],[b,s,0],[c,0,s]], s = +1 (Type1) or
  // -1 (Type2), Q = det g = a - s(b^2 + c^2).
  const double s = kind == SurfaceKind::Type1 ? 1.0 : -1.0;
  const double a = m.a, b = m.b, c = m.c;
  const double Q = a - s * (b * b + c * c);
  if (std::abs(Q) <= kSingularTol) return out;
  std::array<double, 3> P{};
  for (int k = 0; k < 3; ++k) P[k] = da[k] - 2 * s * (b * db[k] + c * dc[k]);

  // Rows of the adjugate applied to (phi_x, beta, gamma).
  const Vec4 X1 = combine({1.0, -s * b, -s * c}, d1);
  const Vec4 X2 = combine({-s * b, s * a - c * c, b * c}, d1);
  const Vec4 X3 = combine({-s * c, b * c, s * a - b * b}, d1);

  const Vec4 X1x = pxx - s * (db[0] * beta + b * bp) - s * (dc[0] * gamma + c * gp);
  const Vec4 X2y_printed = -s * b * bp + (s * da[1] - 2 * c * dc[1]) * beta + (db[1] * c + b * dc[1]) * gamma;
  const Vec4 X3z_printed = -s * c * gp + (db[2] * c + b * dc[2]) * beta + (s * da[2] - 2 * b * db[2]) * gamma;
  const Vec4 X2y = X2y_printed - s * db[1] * px;
  const Vec4 X3z = X3z_printed - s * dc[2] * px;

  const double sq = std::copysign(1.0, Q);
  const double absQ = std::abs(Q);
  const double rootQ = std::sqrt(absQ);
  const double q32 = absQ * rootQ;
  // d_i (X_i / sqrt|Q|) = (X_i,i |Q| - (1/2) sgn(Q) P_i X_i) / |Q|^(3/2)
  const auto term = [&](const Vec4& Xd, const Vec4& X, double Pk) { return (absQ * Xd - 0.5 * sq * Pk * X) / q32; };
  out.closed_form = (sq / rootQ) * (term(X1x, X1, P[0]) + term(X2y, X2, P[1]) + term(X3z, X3, P[2]));

  if (Q > 0) {
    const auto printed = [&](const Vec4& Xd, const Vec4& X, double Pk) { return (Q * Xd - Pk * X) / q32; };
    out.closed_form_as_printed =
        (1.0 / rootQ) * (printed(X1x, X1, P[0]) + printed(X2y_printed, X2, P[1]) + printed(X3z_printed, X3, P[2]));
  }
  return out;
}

Vec4 laplace_beltrami(const RuledHypersurface& h, double x, double y, double z) {
  const Frame f = frame(h, x, y, z);
  return laplace_beltrami_paths(f, first_form(f, h.kind()), h.kind()).general;
}

CurvatureReport curvature_report(const RuledHypersurface& h, double x, double y, double z) {
  CurvatureReport r;
  r.x = x;
  r.y = y;
  r.z = z;
  const Frame f = frame(h, x, y, z);
  r.point = f.phi;
  r.metric = first_form(f, h.kind());
  r.gauss = gauss_map(f);
  if (std::abs(r.metric.detg) <= kSingularTol) throw SingularMetric("first fundamental form is singular");

  r.h = second_form(f, r.gauss);
  r.shape = r.metric.g.inverse() * r.h;
  r.det_h = det3(r.h);
  r.K = r.det_h / r.metric.detg;
  r.H = r.shape.trace() / 3.0;
  r.residual = minimality_residual(f, r.gauss, r.metric, h.kind());
  r.H_from_residual = r.residual.value / (3.0 * r.metric.detg * r.gauss.d);
  r.lb = laplace_beltrami_paths(f, r.metric, h.kind());

  if (r.gauss.normal_character == CausalCharacter::Timelike) r.flags.emplace_back("timelike_normal");
  if ((r.metric.g - r.metric.gram).cwiseAbs().maxCoeff() > kOrthogonalTol) {
    r.flags.emplace_back("metric_model_mismatch");
  }
  if (!h.warnings().empty()) r.flags.emplace_back("lax_warnings");
  return r;
}

}  // namespace ruled4
