#pragma once

#include <array>
#include <string>

#include "ruled4/lorentz.hpp"

namespace ruled4 {

// Ordered triple (i, j, k) meaning e_i e_j = e_k, indices in 1..7.
struct ImaginaryTriple {
  int i = 1;
  int j = 2;
  int k = 4;
};

// Signed products of the imaginary units e1..e7.
// product(i, j) = sign * e_index, index 0 standing for the real unit.
class MulTable {
 public:
  struct Entry {
    int sign = 0;
    int index = 0;
  };

  // Closure of the seed under anticommutation, index cycling (i -> i+1) and
  // index doubling (i -> 2i), indices taken in Z_7 with 7 == 0.
  // Throws InconsistentSeed if the closure is contradictory or not total.
  static MulTable build(ImaginaryTriple seed = {});

  Entry product(int i, int j) const { return cells_.at(i - 1).at(j - 1); }

  // 7x7 CSV: header row of e1..e7, each cell "+k" / "-k" (-0 is -1).
  std::string to_csv() const;

 private:
  std::array<std::array<Entry, 7>, 7> cells_{};
};

const MulTable& default_table();

class Octonion {
 public:
  constexpr Octonion() = default;
  explicit Octonion(const std::array<double, 8>& a);

  static Octonion unit(int index);  // e_index, 0 is the real unit

  double operator[](std::size_t i) const { return a_[i]; }
  const std::array<double, 8>& coefficients() const { return a_; }
  double norm() const;  // Euclidean 8-norm

  friend Octonion operator+(const Octonion& p, const Octonion& q);
  friend Octonion operator-(const Octonion& p, const Octonion& q);
  friend Octonion operator*(double s, const Octonion& p);
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, 8> a_{};
};

Octonion oct_mul(const Octonion& p, const Octonion& q, const MulTable& table = default_table());

// Octonion with e5, e6, e7 coefficients zero: scalar + (e1..e4) vector part.
struct ParticularOctonion {
  double scalar = 0.0;
  Vec4 vector;

  Octonion to_octonion() const;
  friend bool operator==(const ParticularOctonion&, const ParticularOctonion&) = default;
};

// Q*P*I = S(Q)S(P) - <V(Q),V(P)> + S(Q)V(P) + S(P)V(Q) + V(Q) x V(P) x I,
// with the Lorentzian product and ternary cross product.
// Throws NonUnitI unless |<I,I>| = 1 within 1e-9.
ParticularOctonion particular_product(const ParticularOctonion& q, const ParticularOctonion& p,
                                      const Vec4& unit_i);

void require_unit(const Vec4& unit_i);

}  // namespace ruled4
