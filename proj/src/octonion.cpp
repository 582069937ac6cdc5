#include "ruled4/octonion.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ruled4/errors.hpp"

namespace ruled4 {
namespace {

int wrap7(int n) {
  const int r = ((n % 7) + 7) % 7;
  return r == 0 ? 7 : r;
}

}  // namespace

MulTable MulTable::build(ImaginaryTriple seed) {
  const auto valid = [](int n) { return n >= 1 && n <= 7; };
  if (!valid(seed.i) || !valid(seed.j) || !valid(seed.k) || seed.i == seed.j || seed.j == seed.k ||
      seed.i == seed.k) {
    throw std::invalid_argument("seed must be three distinct indices in 1..7");
  }

  MulTable table;
  for (int i = 1; i <= 7; ++i) table.cells_[i - 1][i - 1] = {-1, 0};

  const auto assign = [&table](int i, int j, int sign, int k) {
    Entry& cell = table.cells_[i - 1][j - 1];
    if (cell.sign != 0 && (cell.sign != sign || cell.index != k)) {
      std::ostringstream msg;
      msg << "closure assigns e" << i << "e" << j << " both " << (cell.sign > 0 ? "+" : "-") << "e"
          << cell.index << " and " << (sign > 0 ? "+" : "-") << "e" << k;
      throw InconsistentSeed(msg.str());
    }
    cell = {sign, k};
  };

  std::set<std::tuple<int, int, int>> seen;
  std::deque<std::tuple<int, int, int>> work{{seed.i, seed.j, seed.k}};
  while (!work.empty()) {
    const auto t = work.front();
    work.pop_front();
    if (!seen.insert(t).second) continue;
    const auto [i, j, k] = t;
    assign(i, j, +1, k);
    assign(j, i, -1, k);
    work.emplace_back(wrap7(i + 1), wrap7(j + 1), wrap7(k + 1));
    work.emplace_back(wrap7(2 * i), wrap7(2 * j), wrap7(2 * k));
  }

  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (table.cells_[i - 1][j - 1].sign == 0) {
        throw InconsistentSeed("closure leaves e" + std::to_string(i) + "e" + std::to_string(j) +
                               " undefined");
      }
    }
  }

  // A quaternionic triple e_i e_j = e_k also gives e_j e_k = e_i. Seeds
  // whose closure breaks this fill every cell but are not octonion tables.
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const Entry ij = table.product(i, j);
      const Entry jk = table.product(j, ij.index);
      if (jk.index != i || jk.sign != ij.sign) {
        throw InconsistentSeed("seed is not a quaternionic triple: e" + std::to_string(i) + "e" +
                               std::to_string(j) + " = " + (ij.sign > 0 ? "+" : "-") + "e" +
                               std::to_string(ij.index) + " but e" + std::to_string(j) + "e" +
                               std::to_string(ij.index) + " != " + (ij.sign > 0 ? "+" : "-") + "e" +
                               std::to_string(i));
      }
    }
  }
  return table;
}

std::string MulTable::to_csv() const {
  std::ostringstream out;
  for (int j = 1; j <= 7; ++j) out << ",e" << j;
  out << "\n";
  for (int i = 1; i <= 7; ++i) {
    out << "e" << i;
    for (int j = 1; j <= 7; ++j) {
      const Entry e = product(i, j);
      out << "," << (e.sign > 0 ? "+" : "-") << e.index;
    }
    out << "\n";
  }
  return out.str();
}

const MulTable& default_table() {
  static const MulTable table = MulTable::build();
  return table;
}

Octonion::Octonion(const std::array<double, 8>& a) : a_(a) {
  for (double v : a_) {
    if (!std::isfinite(v)) throw DomainError("Octonion coefficient is not finite");
  }
}

Octonion Octonion::unit(int index) {
  std::array<double, 8> a{};
  a.at(static_cast<std::size_t>(index)) = 1.0;
  return Octonion(a);
}

double Octonion::norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

Octonion operator+(const Octonion& p, const Octonion& q) {
  std::array<double, 8> r{};
  for (std::size_t i = 0; i < 8; ++i) r[i] = p.a_[i] + q.a_[i];
  return Octonion(r);
}

Octonion operator-(const Octonion& p, const Octonion& q) {
  std::array<double, 8> r{};
  for (std::size_t i = 0; i < 8; ++i) r[i] = p.a_[i] - q.a_[i];
  return Octonion(r);
}

Octonion operator*(double s, const Octonion& p) {
  std::array<double, 8> r{};
  for (std::size_t i = 0; i < 8; ++i) r[i] = s * p.a_[i];
  return Octonion(r);
}

Octonion oct_mul(const Octonion& p, const Octonion& q, const MulTable& table) {
  std::array<double, 8> r{};
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const double ab = a[i] * b[j];
      if (i == 0) {
        r[j] += ab;
      } else if (j == 0) {
        r[i] += ab;
      } else {
        const auto e = table.product(i, j);
        r[e.index] += e.sign * ab;
      }
    }
  }
  return Octonion(r);
}

Octonion ParticularOctonion::to_octonion() const {
  return Octonion({scalar, vector[0], vector[1], vector[2], vector[3], 0.0, 0.0, 0.0});
}

void require_unit(const Vec4& unit_i) {
  if (std::abs(std::abs(lorentz_dot(unit_i, unit_i)) - 1.0) > kMembershipTol) {
    throw NonUnitI("I must satisfy |<I,I>| = 1");
  }
}

ParticularOctonion particular_product(const ParticularOctonion& q, const ParticularOctonion& p,
                                      const Vec4& unit_i) {
  require_unit(unit_i);
  ParticularOctonion out;
  out.scalar = q.scalar * p.scalar - lorentz_dot(q.vector, p.vector);
  out.vector = q.scalar * p.vector + p.scalar * q.vector + cross4(q.vector, p.vector, unit_i);
  return out;
}

}  // namespace ruled4
