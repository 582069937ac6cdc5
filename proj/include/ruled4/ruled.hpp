#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ruled4/curve.hpp"
#include "ruled4/lorentz.hpp"

namespace ruled4 {

using Mat3 = Eigen::Matrix3d;

// Type1: directors on de Sitter space S^3_1; Type2: directors on H^3_+(-1).
// Unconstrained: no director constraint, metric from actual inner products.
enum class SurfaceKind { Type1, Type2, Unconstrained };

std::string_view to_string(SurfaceKind k);

struct ParamBox {
  Interval x{-1.0, 1.0, 3};
  Interval y{-1.0, 1.0, 3};
  Interval z{-1.0, 1.0, 3};
};

// phi(x, y, z) = alpha(x) + y beta(x) + z gamma(x).
class RuledHypersurface {
 public:
  RuledHypersurface(Curve alpha, Curve beta, Curve gamma, SurfaceKind kind, ParamBox box = {});

  const Curve& alpha() const { return alpha_; }
  const Curve& beta() const { return beta_; }
  const Curve& gamma() const { return gamma_; }
  SurfaceKind kind() const { return kind_; }
  const ParamBox& box() const { return box_; }

  // Lax-mode findings (director violations, construction hypotheses).
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  Curve alpha_;
  Curve beta_;
  Curve gamma_;
  SurfaceKind kind_;
  ParamBox box_;
  std::vector<std::string> warnings_;
};

// Validates beta and gamma against the director space of `kind` on the
// x-interval. Strict mode throws DirectorConstraintViolated; lax mode records
// one warning per failing director.
RuledHypersurface make_ruled(Curve alpha, Curve beta, Curve gamma, SurfaceKind kind, bool strict,
                             ParamBox box = {});

Vec4 eval_point(const RuledHypersurface& h, double x, double y, double z);

// Coordinate derivatives. phi_yy = phi_yz = phi_zz = 0 identically.
struct Frame {
  Vec4 phi;
  Vec4 phi_x;
  Vec4 phi_y;  // beta
  Vec4 phi_z;  // gamma
  Vec4 phi_xx;
  Vec4 phi_xy;  // beta'
  Vec4 phi_xz;  // gamma'
};

Frame frame(const RuledHypersurface& h, double x, double y, double z);

struct GaussMapData {
  Vec4 n_raw;  // phi_x x phi_y x phi_z
  Vec4 g;      // n_raw / d
  double d = 0.0;  // sqrt(|<n_raw, n_raw>|)
  CausalCharacter normal_character = CausalCharacter::Zero;
};

// Throws DegenerateNormal when the normal vanishes or is lightlike.
GaussMapData gauss_map(const Frame& f);
GaussMapData gauss_map(const RuledHypersurface& h, double x, double y, double z);

struct MetricData {
  Mat3 g = Mat3::Zero();     // first fundamental form as modeled for the kind
  Mat3 gram = Mat3::Zero();  // actual Lorentzian Gram matrix of (phi_x, phi_y, phi_z)
  double a = 0.0;            // <phi_x, phi_x>
  double b = 0.0;            // <beta, phi_x>
  double c = 0.0;            // <gamma, phi_x>
  double e = 0.0;            // <beta, gamma>
  double g22 = 1.0;
  double g33 = 1.0;
  double detg = 0.0;         // direct 3x3 determinant of g
  double detg_closed = 0.0;  // closed-form determinant for the kind
};

// g_22 = g_33 = +1 for Type1 and -1 for Type2; Unconstrained uses the
// actual <beta,beta>, <gamma,gamma>.
MetricData first_form(const Frame& f, SurfaceKind kind);
MetricData first_form(const RuledHypersurface& h, double x, double y, double z);

// Adjugate closed form divided by det g. Throws SingularMetric when
// |det g| <= 1e-12.
Mat3 inverse_metric(const MetricData& m, SurfaceKind kind);
// The adjugate alone (numerators of the closed form).
Mat3 metric_adjugate(const MetricData& m, SurfaceKind kind);

// h_11 = <phi_xx, G>, h_12 = <beta', G>, h_13 = <gamma', G>, rest zero.
Mat3 second_form(const Frame& f, const GaussMapData& gm);
Mat3 second_form(const RuledHypersurface& h, double x, double y, double z);

struct MinimalityResidual {
  // adj_11 <phi_xx,N> + 2 adj_12 <beta',N> + 2 adj_13 <gamma',N>, N unnormalized.
  double value = 0.0;
  // The same with e = 0 substituted; present when |e| <= 1e-9.
  std::optional<double> orthogonal;
};

MinimalityResidual minimality_residual(const Frame& f, const GaussMapData& gm, const MetricData& m,
                                       SurfaceKind kind);
MinimalityResidual minimality_residual(const RuledHypersurface& h, double x, double y, double z);

struct LaplaceBeltramiPaths {
  Vec4 general;
  // Orthogonal-director closed form in quotient-rule form; present when
  // e and e_x vanish (|.| <= 1e-9) and the kind is Type1 or Type2.
  std::optional<Vec4> closed_form;
  // The closed form exactly as printed (full P_i weight, no b_y, c_z terms);
  // present under the same conditions when Q > 0. Kept for the discrepancy
  // report only.
  std::optional<Vec4> closed_form_as_printed;
};

// Componentwise (1/sqrt|g|) d_i (sqrt|g| g^ij d_j phi) with analytic outer
// derivatives. Throws SingularMetric.
LaplaceBeltramiPaths laplace_beltrami_paths(const Frame& f, const MetricData& m, SurfaceKind kind);
Vec4 laplace_beltrami(const RuledHypersurface& h, double x, double y, double z);

struct CurvatureReport {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  Vec4 point;
  MetricData metric;
  GaussMapData gauss;
  Mat3 h = Mat3::Zero();
  Mat3 shape = Mat3::Zero();
  double det_h = 0.0;
  double K = 0.0;
  double H = 0.0;
  double H_from_residual = 0.0;  // residual / (3 det g D)
  MinimalityResidual residual;
  LaplaceBeltramiPaths lb;
  std::vector<std::string> flags;
};

// Throws DegenerateNormal or SingularMetric.
CurvatureReport curvature_report(const RuledHypersurface& h, double x, double y, double z);

}  // namespace ruled4
