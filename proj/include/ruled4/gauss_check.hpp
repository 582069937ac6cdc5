#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>

#include "ruled4/lorentz.hpp"

namespace ruled4 {

// Multilinear polynomial in the components of (phi_x, beta, gamma): each key
// (i, j, k) is the monomial phi_x[i] * beta[j] * gamma[k], slots 0..3.
using Trilinear = std::map<std::tuple<int, int, int>, int>;

// Component polynomials of phi_x x beta x gamma, expanded symbolically from
// the determinant with first row (-e1, e2, e3, e4) by the Leibniz formula.
std::array<Trilinear, 4> symbolic_normal_components();

// The printed component formulas of the type-1 Gauss map, written with
// E_ij = gamma_i (phi_x)_j (1-based), expanded into the same monomials.
std::array<Trilinear, 4> printed_normal_components();

double evaluate(const Trilinear& poly, const Vec4& phi_x, const Vec4& beta, const Vec4& gamma);

// Direct evaluation of the printed G_1..G_4.
Vec4 printed_normal(const Vec4& phi_x, const Vec4& beta, const Vec4& gamma);

enum class SignVerdict { Match, Negated, Mismatch };
std::string_view to_string(SignVerdict v);

struct ComponentComparison {
  int component = 1;  // 1-based, as in e1..e4
  SignVerdict verdict = SignVerdict::Match;
  std::string detail;
};

// Compares the printed formulas against the symbolic expansion, component by
// component.
std::array<ComponentComparison, 4> compare_printed_normal();

}  // namespace ruled4
