#include "ruled4/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruled4 {

Quad<Jet2> to_jets(const CurveJet& c) {
  Quad<Jet2> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = Jet2(c.p[i], c.d1[i], c.d2[i]);
  return out;
}

CurveJet from_jets(const Quad<Jet2>& j) {
  return {Vec4(j[0].f, j[1].f, j[2].f, j[3].f), Vec4(j[0].d1, j[1].d1, j[2].d1, j[3].d1),
          Vec4(j[0].d2, j[1].d2, j[2].d2, j[3].d2)};
}

CurveSpec CurveSpec::parse(const std::array<std::string, 4>& texts) {
  CurveSpec c{{Expr::number(0), Expr::number(0), Expr::number(0), Expr::number(0)}, texts};
  for (std::size_t i = 0; i < 4; ++i) c.comp[i] = Expr::parse(texts[i]);
  return c;
}

CurveSpec CurveSpec::parse(const std::vector<std::string>& texts) {
  if (texts.size() != 4) throw std::invalid_argument("a curve needs exactly four components");
  return parse(std::array<std::string, 4>{texts[0], texts[1], texts[2], texts[3]});
}

CurveJet curve_eval(const CurveSpec& c, double t) {
  Quad<Jet2> j;
  for (std::size_t i = 0; i < 4; ++i) j[i] = jet_eval(c.comp[i], t);
  return from_jets(j);
}

Curve::Curve(CurveSpec spec)
    : fn_([spec](double t) { return curve_eval(spec, t); }),
      label_("(" + spec.source[0] + ", " + spec.source[1] + ", " + spec.source[2] + ", " + spec.source[3] +
             ")") {}

double Interval::at(int i) const {
  if (n < 2) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

DirectorReport validate_director(const Curve& c, ModelSpace constraint, const Interval& samples) {
  DirectorReport r;
  r.constraint = constraint;
  const double target = constraint == ModelSpace::Hyperbolic3 ? -1.0 : constraint == ModelSpace::DeSitter3 ? 1.0 : 0.0;
  const int n = std::max(samples.n, 1);
  for (int i = 0; i < n; ++i) {
    const double t = samples.at(i);
    const Vec4 p = c(t).p;
    const double q = lorentz_dot(p, p);
    const double v = std::abs(q - target);
    if (i == 0 || v > r.max_violation) {
      r.max_violation = v;
      r.worst_quadratic = q;
      r.worst_t = t;
    }
    if (constraint == ModelSpace::Hyperbolic3 && !(p[0] > 0)) r.sign_ok = false;
    if (constraint == ModelSpace::LightCone && p[0] == 0) r.sign_ok = false;
  }
  r.pass = r.max_violation <= kMembershipTol && r.sign_ok;
  return r;
}

}  // namespace ruled4
