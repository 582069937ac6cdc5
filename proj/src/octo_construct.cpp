#include "ruled4/octo_construct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ruled4 {
namespace {

Interval hypothesis_grid(const ParamBox& box) { return {box.x.lo, box.x.hi, std::max(box.x.n, 65)}; }

double norm_violation(const Vec4& v, InnerProduct ip) { return std::abs(std::abs(inner(v, v, ip)) - 1.0); }

void warn_if(RuledHypersurface& h, double violation, const std::string& what) {
  if (violation > kMembershipTol) {
    std::ostringstream out;
    out << what << " (max violation " << violation << ")";
    h.add_warning(out.str());
  }
}

}  // namespace

Curve ternary_sum_curve(std::vector<std::pair<Curve, Curve>> pairs, const Vec4& unit_i, std::string label) {
  Quad<Jet2> ij;
  for (std::size_t k = 0; k < 4; ++k) ij[k] = Jet2(unit_i[k]);
  return Curve(
      [pairs = std::move(pairs), ij](double t) {
        Quad<Jet2> sum{};
        for (const auto& [left, right] : pairs) {
          const Quad<Jet2> c = cross4(to_jets(left(t)), to_jets(right(t)), ij);
          for (std::size_t k = 0; k < 4; ++k) sum[k] = sum[k] + c[k];
        }
        return from_jets(sum);
      },
      std::move(label));
}

RuledHypersurface construct_from_octonions(const Curve& u, const Curve& v, const Curve& w, const Vec4& unit_i,
                                           ParamBox box, InnerProduct ip) {
  require_unit(unit_i);
  Curve alpha = ternary_sum_curve({{u, v}, {u, w}}, unit_i, "u x v x I + u x w x I");
  RuledHypersurface h(std::move(alpha), w, v, SurfaceKind::Unconstrained, box);

  const Interval grid = hypothesis_grid(box);
  double unit_v = 0, unit_w = 0, orth_v = 0, orth_w = 0, same = 0;
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.at(i);
    const Vec4 up = u(t).p, vp = v(t).p, wp = w(t).p;
    unit_v = std::max(unit_v, norm_violation(vp, ip));
    unit_w = std::max(unit_w, norm_violation(wp, ip));
    orth_v = std::max(orth_v, std::abs(inner(vp, up, ip)));
    orth_w = std::max(orth_w, std::abs(inner(wp, up, ip)));
    const Vec4 diff = vp - wp;
    same = std::max(same, std::sqrt(euclid_dot(diff, diff)));
  }
  const std::string mode(to_string(ip));
  warn_if(h, unit_v, "v is not unit under the " + mode + " product");
  warn_if(h, unit_w, "w is not unit under the " + mode + " product");
  warn_if(h, orth_v, "v is not orthogonal to u under the " + mode + " product");
  warn_if(h, orth_w, "w is not orthogonal to u under the " + mode + " product");
  if (same <= 1e-12) h.add_warning("degenerate ruling: v = w");
  return h;
}

ParticularOctonion star_product_point(const Curve& u, const Curve& v, const Curve& w, const Vec4& unit_i,
                                      double t, double s, double r) {
  const Vec4 up = u(t).p;
  const ParticularOctonion first = particular_product({s, up}, {0.0, w(t).p}, unit_i);
  const ParticularOctonion second = particular_product({r, up}, {0.0, v(t).p}, unit_i);
  return {first.scalar + second.scalar, first.vector + second.vector};
}

RuledHypersurface construct_from_dual_curves(const Curve& a, const Curve& a_star, const Curve& b,
                                             const Curve& b_star, const Vec4& unit_i, ParamBox box,
                                             InnerProduct ip) {
  require_unit(unit_i);
  Curve alpha = ternary_sum_curve({{a, a_star}, {b, b_star}}, unit_i, "a x a* x I + b x b* x I");
  RuledHypersurface h(std::move(alpha), a, b, SurfaceKind::Unconstrained, box);

  const Interval grid = hypothesis_grid(box);
  double first = 0, second = 0;
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.at(i);
    for (int k = 0; k < 2; ++k) {
      const DualVec4 d = k == 0 ? DualVec4{a(t).p, a_star(t).p} : DualVec4{b(t).p, b_star(t).p};
      const Dual n = dual_norm(d, ip);
      const double viol = std::max(std::abs(n.re - 1.0), std::abs(n.eps));
      (k == 0 ? first : second) = std::max(k == 0 ? first : second, viol);
    }
  }
  const std::string mode(to_string(ip));
  warn_if(h, first, "a + eps a* is off the unit dual sphere under the " + mode + " product");
  warn_if(h, second, "b + eps b* is off the unit dual sphere under the " + mode + " product");
  return h;
}

}  // namespace ruled4
