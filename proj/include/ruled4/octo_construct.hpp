#pragma once

#include "ruled4/curve.hpp"
#include "ruled4/dual.hpp"
#include "ruled4/octonion.hpp"
#include "ruled4/ruled.hpp"

namespace ruled4 {

// Jet-valued base curve t -> sum_k (left_k(t) x right_k(t) x I).
Curve ternary_sum_curve(std::vector<std::pair<Curve, Curve>> pairs, const Vec4& unit_i, std::string label);

// phi(t, s, r) = alpha(t) + s w(t) + r v(t) with
// alpha = u x v x I + u x w x I. Parameters map to (x, y, z) = (t, s, r).
// The hypotheses |v| = |w| = 1 and <v,u> = <w,u> = 0 are checked with `ip`
// on the t-interval and recorded as warnings. Throws NonUnitI.
RuledHypersurface construct_from_octonions(const Curve& u, const Curve& v, const Curve& w, const Vec4& unit_i,
                                           ParamBox box = {}, InnerProduct ip = InnerProduct::Lorentz);

// (s + u) * w * I + (r + u) * v * I through the particular octonion product.
// The vector part equals phi(t, s, r) of construct_from_octonions; the
// scalar part is -<u,w> - <u,v>.
ParticularOctonion star_product_point(const Curve& u, const Curve& v, const Curve& w, const Vec4& unit_i,
                                      double t, double s, double r);

// phi(t, s, r) = alpha(t) + s a(t) + r b(t) with
// alpha = a x a* x I + b x b* x I. Unit dual sphere membership of
// a + eps a* and b + eps b* is checked with `ip` and recorded as warnings.
RuledHypersurface construct_from_dual_curves(const Curve& a, const Curve& a_star, const Curve& b,
                                             const Curve& b_star, const Vec4& unit_i, ParamBox box = {},
                                             InnerProduct ip = InnerProduct::Lorentz);

}  // namespace ruled4
