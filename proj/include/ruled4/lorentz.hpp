#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string_view>

namespace ruled4 {

// Point or vector of Minkowski 4-space R^4_1 with signature (-,+,+,+).
// Slot 0 is the timelike slot.
class Vec4 {
 public:
  constexpr Vec4() = default;
  // Throws DomainError if any component is NaN or infinite.
  Vec4(double c0, double c1, double c2, double c3);
  explicit Vec4(const std::array<double, 4>& c) : Vec4(c[0], c[1], c[2], c[3]) {}

  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, 4>& components() const { return c_; }

  static Vec4 basis(std::size_t slot);

  Vec4 operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Vec4& operator+=(const Vec4& o);
  Vec4& operator-=(const Vec4& o);
  Vec4& operator*=(double s);

  friend Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
  friend Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
  friend Vec4 operator*(Vec4 a, double s) { return a *= s; }
  friend Vec4 operator*(double s, Vec4 a) { return a *= s; }
  friend Vec4 operator/(const Vec4& a, double s);
  friend bool operator==(const Vec4&, const Vec4&) = default;

 private:
  std::array<double, 4> c_{};
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike, Zero };
enum class ModelSpace { Hyperbolic3, DeSitter3, LightCone };

std::string_view to_string(CausalCharacter c);
std::string_view to_string(ModelSpace m);

// Absolute tolerance on the quadratic form used by membership predicates.
inline constexpr double kMembershipTol = 1e-9;

struct Characterization {
  double norm = 0.0;
  CausalCharacter character = CausalCharacter::Zero;
  std::set<ModelSpace> memberships;
};

// Generic forms, instantiated for double and for jets so derivatives of
// products follow the same code path as the values.
template <class T>
using Quad = std::array<T, 4>;

template <class T>
T lorentz_dot(const Quad<T>& x, const Quad<T>& y) {
  return -(x[0] * y[0]) + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

namespace detail {
template <class T>
T det3(const T& a0, const T& a1, const T& a2, const T& b0, const T& b1, const T& b2, const T& c0,
       const T& c1, const T& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

template <class T>
T minor3(const Quad<T>& x, const Quad<T>& y, const Quad<T>& z, std::size_t skip) {
  std::array<std::size_t, 3> k{};
  for (std::size_t i = 0, n = 0; i < 4; ++i) {
    if (i != skip) k[n++] = i;
  }
  return det3(x[k[0]], x[k[1]], x[k[2]], y[k[0]], y[k[1]], y[k[2]], z[k[0]], z[k[1]], z[k[2]]);
}
}  // namespace detail

// Ternary vector product: first-row cofactor expansion of
//   det[ -e1 e2 e3 e4 ; x ; y ; z ].
// Satisfies <cross4(x,y,z), w> = det[w; x; y; z] for every w.
template <class T>
Quad<T> cross4(const Quad<T>& x, const Quad<T>& y, const Quad<T>& z) {
  return {-detail::minor3(x, y, z, 0), -detail::minor3(x, y, z, 1), detail::minor3(x, y, z, 2),
          -detail::minor3(x, y, z, 3)};
}

double lorentz_dot(const Vec4& x, const Vec4& y);
double euclid_dot(const Vec4& x, const Vec4& y);
Vec4 cross4(const Vec4& x, const Vec4& y, const Vec4& z);
Characterization characterize(const Vec4& x);

// Plain 4x4 determinant of the rows (a, b, c, d).
double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);

}  // namespace ruled4
