#include "ruled4/gauss_check.hpp"

#include <algorithm>
#include <sstream>

namespace ruled4 {
namespace {

int permutation_sign(std::array<int, 3> p) {
  int sign = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

void add(Trilinear& poly, std::tuple<int, int, int> mono, int coeff) {
  const int v = (poly[mono] += coeff);
  if (v == 0) poly.erase(mono);
}

// beta_b (E_ij - E_kl), all 1-based; E_ij = gamma_i phi_x_j.
struct PrintedTerm {
  int beta;
  int i, j;
  int k, l;
};

constexpr std::array<std::array<PrintedTerm, 3>, 4> kPrinted{{
    {{{2, 4, 3, 3, 4}, {3, 2, 4, 4, 2}, {4, 3, 2, 2, 3}}},
    {{{1, 4, 3, 3, 4}, {3, 1, 4, 4, 1}, {4, 3, 1, 1, 3}}},
    {{{1, 2, 4, 4, 2}, {2, 4, 1, 1, 4}, {4, 1, 2, 2, 1}}},
    {{{1, 3, 2, 2, 3}, {2, 1, 3, 3, 1}, {3, 2, 1, 1, 2}}},
}};

}  // namespace

std::array<Trilinear, 4> symbolic_normal_components() {
  // First-row signs of the determinant: -e1, +e2, +e3, +e4.
  constexpr std::array<int, 4> row_sign{-1, 1, 1, 1};
  std::array<Trilinear, 4> out;
  for (int col = 0; col < 4; ++col) {
    std::array<int, 3> rest{};
    for (int c = 0, n = 0; c < 4; ++c) {
      if (c != col) rest[n++] = c;
    }
    const int cofactor_sign = (col % 2 == 0) ? 1 : -1;
    std::array<int, 3> perm{0, 1, 2};
    do {
      const int s = row_sign[col] * cofactor_sign * permutation_sign(perm);
      add(out[col], {rest[perm[0]], rest[perm[1]], rest[perm[2]]}, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::array<Trilinear, 4> printed_normal_components() {
  std::array<Trilinear, 4> out;
  for (std::size_t comp = 0; comp < 4; ++comp) {
    for (const PrintedTerm& t : kPrinted[comp]) {
      // beta_b * gamma_i * phi_x_j  -  beta_b * gamma_k * phi_x_l
      add(out[comp], {t.j - 1, t.beta - 1, t.i - 1}, 1);
      add(out[comp], {t.l - 1, t.beta - 1, t.k - 1}, -1);
    }
  }
  return out;
}

double evaluate(const Trilinear& poly, const Vec4& phi_x, const Vec4& beta, const Vec4& gamma) {
  double s = 0.0;
  for (const auto& [mono, coeff] : poly) {
    const auto [i, j, k] = mono;
    s += coeff * phi_x[i] * beta[j] * gamma[k];
  }
  return s;
}

Vec4 printed_normal(const Vec4& phi_x, const Vec4& beta, const Vec4& gamma) {
  const auto E = [&](int i, int j) { return gamma[i - 1] * phi_x[j - 1]; };
  std::array<double, 4> g{};
  for (std::size_t comp = 0; comp < 4; ++comp) {
    for (const PrintedTerm& t : kPrinted[comp]) g[comp] += beta[t.beta - 1] * (E(t.i, t.j) - E(t.k, t.l));
  }
  return Vec4(g);
}

std::string_view to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::Match: return "match";
    case SignVerdict::Negated: return "negated";
    case SignVerdict::Mismatch: return "mismatch";
  }
  return "?";
}

std::array<ComponentComparison, 4> compare_printed_normal() {
  const auto symbolic = symbolic_normal_components();
  const auto printed = printed_normal_components();
  std::array<ComponentComparison, 4> out;
  for (std::size_t c = 0; c < 4; ++c) {
    out[c].component = static_cast<int>(c) + 1;
    Trilinear negated;
    for (const auto& [mono, coeff] : symbolic[c]) negated[mono] = -coeff;
    std::ostringstream detail;
    if (printed[c] == symbolic[c]) {
      out[c].verdict = SignVerdict::Match;
      detail << "all " << symbolic[c].size() << " monomials agree in sign";
    } else if (printed[c] == negated) {
      out[c].verdict = SignVerdict::Negated;
      detail << "printed component is the negative of the expansion";
    } else {
      out[c].verdict = SignVerdict::Mismatch;
      int differing = 0;
      for (const auto& [mono, coeff] : symbolic[c]) {
        const auto it = printed[c].find(mono);
        if (it == printed[c].end() || it->second != coeff) ++differing;
      }
      for (const auto& [mono, coeff] : printed[c]) {
        if (!symbolic[c].count(mono)) ++differing;
      }
      detail << differing << " monomials differ from the expansion";
    }
    out[c].detail = detail.str();
  }
  return out;
}

}  // namespace ruled4
