#include "ruled4/lorentz.hpp"

#include <cmath>

#include "ruled4/errors.hpp"

namespace ruled4 {

Vec4::Vec4(double c0, double c1, double c2, double c3) : c_{c0, c1, c2, c3} {
  for (double v : c_) {
    if (!std::isfinite(v)) throw DomainError("Vec4 component is not finite");
  }
}

Vec4 Vec4::basis(std::size_t slot) {
  std::array<double, 4> c{};
  c.at(slot) = 1.0;
  return Vec4(c);
}

Vec4& Vec4::operator+=(const Vec4& o) {
  *this = Vec4(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
  return *this;
}

Vec4& Vec4::operator-=(const Vec4& o) {
  *this = Vec4(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
  return *this;
}

Vec4& Vec4::operator*=(double s) {
  *this = Vec4(c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
  return *this;
}

Vec4 operator/(const Vec4& a, double s) {
  if (s == 0.0) throw DomainError("Vec4 division by zero");
  return {a.c_[0] / s, a.c_[1] / s, a.c_[2] / s, a.c_[3] / s};
}

std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
    case CausalCharacter::Zero: return "zero";
  }
  return "?";
}

std::string_view to_string(ModelSpace m) {
  switch (m) {
    case ModelSpace::Hyperbolic3: return "H3+";
    case ModelSpace::DeSitter3: return "S3_1";
    case ModelSpace::LightCone: return "LC";
  }
  return "?";
}

double lorentz_dot(const Vec4& x, const Vec4& y) {
  return lorentz_dot(x.components(), y.components());
}

double euclid_dot(const Vec4& x, const Vec4& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

Vec4 cross4(const Vec4& x, const Vec4& y, const Vec4& z) {
  return Vec4(cross4(x.components(), y.components(), z.components()));
}

Characterization characterize(const Vec4& x) {
  Characterization out;
  const double q = lorentz_dot(x, x);
  out.norm = std::sqrt(std::abs(q));

  const double scale = euclid_dot(x, x);
  if (scale == 0.0) {
    out.character = CausalCharacter::Zero;
  } else if (std::abs(q) <= 1e-12 * scale) {
    // Relative threshold keeps the classification scale invariant.
    out.character = CausalCharacter::Lightlike;
  } else {
    out.character = q > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
  }

  if (std::abs(q + 1.0) <= kMembershipTol && x[0] > 0) out.memberships.insert(ModelSpace::Hyperbolic3);
  if (std::abs(q - 1.0) <= kMembershipTol) out.memberships.insert(ModelSpace::DeSitter3);
  if (std::abs(q) <= kMembershipTol && x[0] != 0) out.memberships.insert(ModelSpace::LightCone);
  return out;
}

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  const auto& ac = a.components();
  double total = 0.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < 4; ++j, sign = -sign) {
    total += sign * ac[j] * detail::minor3(b.components(), c.components(), d.components(), j);
  }
  return total;
}

}  // namespace ruled4
