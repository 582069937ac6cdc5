#include "ruled4/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ruled4/errors.hpp"
#include "ruled4/gauss_check.hpp"
#include "ruled4/octo_construct.hpp"

namespace ruled4 {
namespace {

using nlohmann::json;

constexpr double kZeroTol = 1e-9;
constexpr double kIdentityTol = 1e-10;
constexpr double kLinkTol = 1e-8;
constexpr double kReferenceTol = 1e-12;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

double euclid_norm(const Vec4& v) { return std::sqrt(euclid_dot(v, v)); }

json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

Interval t_grid(const ParamBox& box) { return {box.x.lo, box.x.hi, std::max(box.x.n, 65)}; }

std::vector<const CurvatureReport*> valid_reports(const Mesh& mesh) {
  std::vector<const CurvatureReport*> out;
  for (const MeshVertex& v : mesh.vertices) {
    if (v.report) out.push_back(&*v.report);
  }
  return out;
}

std::string vertex_count(std::size_t n) { return std::to_string(n) + (n == 1 ? " vertex" : " vertices"); }

json where(const CurvatureReport& r) { return json::array({r.x, r.y, r.z}); }

Claim director_claim(const std::string& name, const Curve& c, SurfaceKind kind, const ParamBox& box) {
  const ModelSpace space = kind == SurfaceKind::Type1 ? ModelSpace::DeSitter3 : ModelSpace::Hyperbolic3;
  const DirectorReport rep = validate_director(c, space, t_grid(box));
  Claim cl;
  cl.name = "director_" + name;
  cl.paper_claim = name + " lies on " + std::string(to_string(space)) + " for all x";
  cl.computed = rep.pass ? "holds on the sampled x-interval"
                         : "violated: <" + name + "," + name + "> = " + sci(rep.worst_quadratic) +
                               " at x = " + sci(rep.worst_t) + (rep.sign_ok ? "" : "; slot-0 sign condition fails");
  cl.verdict = rep.pass ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"max_violation", rep.max_violation},
             {"worst_quadratic", rep.worst_quadratic},
             {"worst_x", rep.worst_t},
             {"sign_ok", rep.sign_ok}};
  return cl;
}

Claim flatness_claim(const std::vector<const CurvatureReport*>& reps) {
  double max_k = 0.0, max_det_h = 0.0, max_det_s = 0.0;
  for (const auto* r : reps) {
    max_k = std::max(max_k, std::abs(r->K));
    max_det_h = std::max(max_det_h, std::abs(r->det_h));
    const double scale = std::max(1.0, std::pow(r->shape.cwiseAbs().maxCoeff(), 3));
    max_det_s = std::max(max_det_s, std::abs(r->shape.determinant()) / scale);
  }
  Claim cl;
  cl.name = "flatness";
  cl.paper_claim = "the hypersurface is flat (K = 0)";
  const bool ok = max_k <= kZeroTol && max_det_s <= kZeroTol;
  cl.computed = "max |K| = " + sci(max_k) + ", max |det S| (scaled) = " + sci(max_det_s) + " over " +
                vertex_count(reps.size());
  cl.verdict = ok ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"max_abs_K", max_k}, {"max_abs_det_h", max_det_h}, {"max_abs_det_shape_scaled", max_det_s},
             {"vertices", reps.size()}};
  return cl;
}

Claim gauss_consistency_claim(const RuledHypersurface& h, const std::vector<const CurvatureReport*>& reps) {
  double max_orth = 0.0, max_lagrange = 0.0, max_printed = 0.0;
  for (const auto* r : reps) {
    const Frame f = frame(h, r->x, r->y, r->z);
    for (const Vec4& t : {f.phi_x, f.phi_y, f.phi_z}) {
      max_orth = std::max(max_orth, std::abs(lorentz_dot(r->gauss.g, t)) / std::max(1.0, euclid_norm(t)));
    }
    const double nn = lorentz_dot(r->gauss.n_raw, r->gauss.n_raw);
    max_lagrange = std::max(max_lagrange, rel_diff(nn, -r->metric.gram.determinant()));
    const Vec4 printed = printed_normal(f.phi_x, f.phi_y, f.phi_z);
    const Vec4 diff = printed - r->gauss.n_raw;
    max_printed = std::max(max_printed, euclid_norm(diff) / std::max(1.0, euclid_norm(r->gauss.n_raw)));
  }
  Claim cl;
  cl.name = "gauss_map_consistency";
  cl.paper_claim = "G is a unit normal: <G, phi_x> = <G, phi_y> = <G, phi_z> = 0";
  const bool ok = max_orth <= kIdentityTol && max_lagrange <= kIdentityTol;
  cl.computed = "max |<G, phi_i>| = " + sci(max_orth) + ", Lagrange identity defect = " + sci(max_lagrange) +
                ", printed components vs cross product = " + sci(max_printed);
  cl.verdict = ok ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"max_orthogonality_defect", max_orth},
             {"max_lagrange_defect", max_lagrange},
             {"max_printed_component_defect", max_printed}};
  return cl;
}

Claim gauss_sign_claim() {
  Claim cl;
  cl.name = "gauss_map_component_signs";
  cl.paper_claim = "printed component formulas G1..G4 of the type-1 Gauss map";
  json comps = json::array();
  bool all_match = true;
  std::string summary;
  for (const ComponentComparison& c : compare_printed_normal()) {
    comps.push_back({{"component", c.component}, {"verdict", std::string(to_string(c.verdict))}, {"detail", c.detail}});
    all_match = all_match && c.verdict == SignVerdict::Match;
    if (!summary.empty()) summary += ", ";
    summary += "G" + std::to_string(c.component) + " " + std::string(to_string(c.verdict));
  }
  cl.computed = "cofactor expansion vs printed: " + summary;
  cl.verdict = all_match ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"components", comps}};
  return cl;
}

Claim metric_closed_form_claim(const RuledHypersurface& h, const std::vector<const CurvatureReport*>& reps) {
  double max_det = 0.0, max_inv = 0.0;
  for (const auto* r : reps) {
    max_det = std::max(max_det, rel_diff(r->metric.detg_closed, r->metric.detg));
    const Mat3 prod = inverse_metric(r->metric, h.kind()) * r->metric.g;
    max_inv = std::max(max_inv, (prod - Mat3::Identity()).cwiseAbs().maxCoeff());
  }
  Claim cl;
  cl.name = "metric_closed_form";
  cl.paper_claim = "closed-form det g and inverse metric";
  const bool ok = max_det <= kIdentityTol && max_inv <= kIdentityTol;
  cl.computed = "max relative det defect = " + sci(max_det) + ", max |g^-1 g - I| = " + sci(max_inv);
  cl.verdict = ok ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"max_det_defect", max_det}, {"max_inverse_defect", max_inv}};
  return cl;
}

Claim metric_model_claim(const RuledHypersurface& h, const std::vector<const CurvatureReport*>& reps) {
  double worst = 0.0;
  const CurvatureReport* at = nullptr;
  for (const auto* r : reps) {
    const double d = (r->metric.g - r->metric.gram).cwiseAbs().maxCoeff();
    if (d > worst) {
      worst = d;
      at = r;
    }
  }
  Claim cl;
  cl.name = "metric_model_vs_gram";
  cl.paper_claim = std::string("g_22, g_33 and g_23 follow the ") + std::string(to_string(h.kind())) +
                   " director model";
  const bool ok = worst <= kZeroTol;
  cl.computed = ok ? "model metric equals the Gram matrix of (phi_x, phi_y, phi_z)"
                   : "model metric differs from the Gram matrix by up to " + sci(worst);
  cl.verdict = ok ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"max_abs_difference", worst}};
  if (at && !ok) {
    cl.data["witness"] = {{"at", where(*at)}, {"gram", json::array()}};
    for (int i = 0; i < 3; ++i) {
      cl.data["witness"]["gram"].push_back(
          json::array({at->metric.gram(i, 0), at->metric.gram(i, 1), at->metric.gram(i, 2)}));
    }
  }
  return cl;
}

Claim minimality_link_claim(const std::vector<const CurvatureReport*>& reps) {
  double worst = 0.0;
  for (const auto* r : reps) {
    // Both below 1e-12 counts as agreement on zero.
    const double scale = std::max(std::abs(r->H), std::abs(r->H_from_residual));
    if (scale > 1e-12) worst = std::max(worst, std::abs(r->H - r->H_from_residual) / scale);
  }
  Claim cl;
  cl.name = "minimality_linkage";
  cl.paper_claim = "H = 0 iff the minimality residual vanishes";
  cl.computed = "shape-operator trace and residual path agree to " + sci(worst) + " relative";
  cl.verdict = worst <= kLinkTol ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"max_relative_difference", worst}};
  return cl;
}

json probe_json(const RuledHypersurface& h, const std::array<double, 3>& p) {
  json out{{"at", p}};
  try {
    const Frame f = frame(h, p[0], p[1], p[2]);
    const GaussMapData gm = gauss_map(f);
    out["h11_raw"] = lorentz_dot(f.phi_xx, gm.n_raw);
    out["h12_raw"] = lorentz_dot(f.phi_xy, gm.n_raw);
    out["h13_raw"] = lorentz_dot(f.phi_xz, gm.n_raw);
    out["n_raw"] = vec_json(gm.n_raw);
    const CurvatureReport r = curvature_report(h, p[0], p[1], p[2]);
    out["H"] = r.H;
    out["H_from_residual"] = r.H_from_residual;
    out["minimality_residual"] = r.residual.value;
    out["laplace_beltrami"] = vec_json(r.lb.general);
  } catch (const Error& e) {
    out["error"] = e.what();
  }
  return out;
}

Claim minimal_claim(const SceneConfig& cfg, const RuledHypersurface& h,
                    const std::vector<const CurvatureReport*>& reps) {
  const CurvatureReport* witness = nullptr;
  double max_h = 0.0, max_res = 0.0;
  for (const auto* r : reps) {
    max_res = std::max(max_res, std::abs(r->residual.value));
    if (!witness || std::abs(r->H) > max_h) {
      max_h = std::max(max_h, std::abs(r->H));
      witness = r;
    }
  }
  const bool minimal = max_h <= kZeroTol;
  Claim cl;
  cl.name = "minimal";
  cl.paper_claim = cfg.claims.minimal ? (*cfg.claims.minimal ? "minimal (H = 0)" : "not minimal") : "none";
  cl.computed = std::string(minimal ? "minimal" : "not-minimal") + ": max |H| = " + sci(max_h) +
                ", max |residual| = " + sci(max_res);
  cl.verdict = (!cfg.claims.minimal || *cfg.claims.minimal == minimal) ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"minimal", minimal}, {"max_abs_H", max_h}, {"max_abs_residual", max_res}};
  if (witness && !minimal) {
    cl.data["witness"] = {{"at", where(*witness)},
                          {"H", witness->H},
                          {"H_from_residual", witness->H_from_residual},
                          {"h11", witness->h(0, 0)},
                          {"h11_raw", witness->h(0, 0) * witness->gauss.d}};
  }
  json probes = json::array();
  for (const auto& p : cfg.probes) probes.push_back(probe_json(h, p));
  cl.data["probes"] = probes;
  return cl;
}

Claim lb_zero_claim(const SceneConfig& cfg, const std::vector<const CurvatureReport*>& reps) {
  double worst = 0.0;
  const CurvatureReport* witness = nullptr;
  for (const auto* r : reps) {
    const double n = euclid_norm(r->lb.general);
    if (!witness || n > worst) {
      worst = std::max(worst, n);
      witness = r;
    }
  }
  const bool zero = worst <= kZeroTol;
  Claim cl;
  cl.name = "laplace_beltrami_zero";
  const auto& claim = cfg.claims.laplace_beltrami_zero;
  cl.paper_claim = claim ? (*claim ? "Laplace-Beltrami operator is zero" : "Laplace-Beltrami operator is nonzero")
                         : "none";
  cl.computed = std::string(zero ? "zero" : "nonzero") + ": max |Delta phi| = " + sci(worst);
  cl.verdict = (!claim || *claim == zero) ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"zero", zero}, {"max_norm", worst}};
  if (witness && !zero) cl.data["witness"] = {{"at", where(*witness)}, {"value", vec_json(witness->lb.general)}};
  return cl;
}

Claim lb_closed_form_claim(const std::vector<const CurvatureReport*>& reps) {
  double worst = 0.0;
  std::size_t used = 0;
  for (const auto* r : reps) {
    if (!r->lb.closed_form) continue;
    ++used;
    worst = std::max(worst, euclid_norm(*r->lb.closed_form - r->lb.general) /
                                std::max(1.0, euclid_norm(r->lb.general)));
  }
  Claim cl;
  cl.name = "laplace_beltrami_closed_form";
  cl.paper_claim = "orthogonal-director closed form of the Laplace-Beltrami operator";
  if (used == 0) {
    cl.computed = "not applicable: directors are not orthogonal with constant model norms";
  } else {
    cl.computed = "corrected closed form vs general path: max defect " + sci(worst) + " over " +
                  vertex_count(used);
  }
  cl.verdict = worst <= kLinkTol ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"vertices", used}, {"max_defect", worst}};
  return cl;
}

Claim lb_as_printed_claim(const std::vector<const CurvatureReport*>& reps) {
  double worst = 0.0;
  std::size_t used = 0;
  const CurvatureReport* witness = nullptr;
  for (const auto* r : reps) {
    if (!r->lb.closed_form_as_printed) continue;
    ++used;
    const double d = euclid_norm(*r->lb.closed_form_as_printed - r->lb.general) /
                     std::max(1.0, euclid_norm(r->lb.general));
    if (!witness || d > worst) {
      worst = std::max(worst, d);
      witness = r;
    }
  }
  Claim cl;
  cl.name = "laplace_beltrami_as_printed";
  cl.paper_claim = "printed closed form with weight P_i and no b_y, c_z terms";
  if (used == 0) {
    cl.computed = "not applicable";
    cl.verdict = Verdict::Pass;
  } else if (worst <= kLinkTol) {
    cl.computed = "agrees with the general path on " + vertex_count(used) + " (max defect " + sci(worst) + ")";
    cl.verdict = Verdict::Pass;
  } else {
    cl.computed = "differs from the general path by up to " + sci(worst) +
                  "; the corrected form (weight P_i / 2, plus -b_y phi_x and -c_z phi_x) matches it";
    cl.verdict = Verdict::Discrepancy;
    cl.data["witness"] = {{"at", where(*witness)},
                          {"as_printed", vec_json(*witness->lb.closed_form_as_printed)},
                          {"general", vec_json(witness->lb.general)}};
  }
  cl.data["vertices"] = used;
  cl.data["max_defect"] = worst;
  return cl;
}

Claim hypotheses_claim(const std::string& name, const std::string& paper, const RuledHypersurface& h) {
  Claim cl;
  cl.name = name;
  cl.paper_claim = paper;
  if (h.warnings().empty()) {
    cl.computed = "hypotheses hold on the sampled t-interval";
  } else {
    for (const auto& w : h.warnings()) cl.computed += (cl.computed.empty() ? "" : "; ") + w;
  }
  cl.verdict = h.warnings().empty() ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"warnings", h.warnings()}};
  return cl;
}

Claim star_product_claim(const SceneConfig& cfg, const RuledHypersurface& h, const Mesh& mesh) {
  const Curve u(cfg.curves.at("u")), v(cfg.curves.at("v")), w(cfg.curves.at("w"));
  double vec_defect = 0.0, max_scalar = 0.0;
  for (const MeshVertex& mv : mesh.vertices) {
    if (std::isnan(mv.point[0])) continue;
    const ParticularOctonion p = star_product_point(u, v, w, cfg.unit_i, mv.x, mv.y, mv.z);
    const Vec4 direct = eval_point(h, mv.x, mv.y, mv.z);
    vec_defect = std::max(vec_defect, euclid_norm(p.vector - direct) / std::max(1.0, euclid_norm(direct)));
    max_scalar = std::max(max_scalar, std::abs(p.scalar));
  }
  Claim cl;
  cl.name = "star_product_equivalence";
  cl.paper_claim = "(s + u) w I + (r + u) v I equals phi(s, r, t)";
  cl.computed = "vector parts agree to " + sci(vec_defect) + "; scalar part -<u,w> - <u,v> up to " +
                sci(max_scalar) + (max_scalar <= kZeroTol ? " (vanishes)" : " (orthogonality fails)");
  cl.verdict = vec_defect <= kIdentityTol ? Verdict::Pass : Verdict::Fail;
  cl.data = {{"max_vector_defect", vec_defect}, {"max_abs_scalar", max_scalar}};
  return cl;
}

Claim reference_claim(const std::string& name, const std::string& paper, const CurveSpec& printed,
                      const Curve& computed, const Interval& grid) {
  const CurveComparison cmp = compare_curves(printed, computed, grid);
  Claim cl;
  cl.name = name;
  cl.paper_claim = paper;
  std::string summary;
  json comps = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    if (!summary.empty()) summary += ", ";
    summary += "c" + std::to_string(k) + " " + cmp.verdict[k];
    comps.push_back({{"component", k},
                     {"printed", printed.source[k]},
                     {"verdict", cmp.verdict[k]},
                     {"max_deviation", cmp.max_deviation[k]}});
  }
  cl.computed = "against " + computed.label() + ": " + summary;
  cl.verdict = cmp.all_match() ? Verdict::Pass : Verdict::Discrepancy;
  cl.data = {{"components", comps}};
  return cl;
}

Claim alpha_probe_claim(const SceneConfig& cfg, const Interval& grid) {
  const Curve u(cfg.curves.at("u")), v(cfg.curves.at("v")), w(cfg.curves.at("w"));
  const auto candidates = probe_alpha_candidates(u, v, w, cfg.reference->alpha, grid);
  Claim cl;
  cl.name = "alpha_I_probe";
  cl.paper_claim = "printed base curve alpha(t) for an unspecified unit I";
  json list = json::array();
  std::string matched;
  for (const AlphaCandidate& c : candidates) {
    const std::string label = std::string(c.sign > 0 ? "+" : "-") + "e" + std::to_string(c.slot + 1);
    list.push_back({{"I", label}, {"max_deviation", c.max_deviation}, {"matches", c.matches}});
    if (c.matches) matched += (matched.empty() ? "" : ", ") + label;
  }
  cl.computed = matched.empty() ? "no signed basis vector I reproduces the printed alpha"
                                : "printed alpha reproduced by I = " + matched;
  cl.verdict = matched.empty() ? Verdict::Discrepancy : Verdict::Pass;
  cl.data = {{"candidates", list}};
  return cl;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Discrepancy: return "discrepancy";
  }
  return "?";
}

bool CheckReport::ok() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == Verdict::Fail; });
}

const Claim* CheckReport::find(std::string_view name) const {
  for (const Claim& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json CheckReport::ledger() const {
  json out = json::array();
  for (const Claim& c : claims) {
    out.push_back({{"name", c.name},
                   {"paper_claim", c.paper_claim},
                   {"computed", c.computed},
                   {"verdict", std::string(to_string(c.verdict))},
                   {"data", c.data}});
  }
  return out;
}

json CheckReport::to_json() const {
  return json{{"scene", scene},
              {"mode", std::string(to_string(mode))},
              {"grid", {{"dims", dims}, {"degenerate_vertices", degenerate_vertices}}},
              {"warnings", warnings},
              {"ok", ok()},
              {"claims", ledger()}};
}

bool CurveComparison::all_match() const {
  return std::all_of(verdict.begin(), verdict.end(), [](const std::string& v) { return v == "match"; });
}

CurveComparison compare_curves(const CurveSpec& printed, const Curve& computed, const Interval& grid) {
  CurveComparison out;
  std::array<double, 4> plus{}, minus{};
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.at(i);
    const Vec4 want = curve_eval(printed, t).p;
    const Vec4 got = computed(t).p;
    for (std::size_t k = 0; k < 4; ++k) {
      plus[k] = std::max(plus[k], std::abs(want[k] - got[k]));
      minus[k] = std::max(minus[k], std::abs(want[k] + got[k]));
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    out.max_deviation[k] = plus[k];
    if (plus[k] <= kReferenceTol) {
      out.verdict[k] = "match";
    } else if (minus[k] <= kReferenceTol) {
      out.verdict[k] = "negated";
    } else {
      out.verdict[k] = "mismatch";
    }
  }
  return out;
}

std::vector<AlphaCandidate> probe_alpha_candidates(const Curve& u, const Curve& v, const Curve& w,
                                                   const CurveSpec& printed_alpha, const Interval& grid) {
  std::vector<AlphaCandidate> out;
  for (int slot = 0; slot < 4; ++slot) {
    for (int sign : {1, -1}) {
      const Vec4 unit_i = static_cast<double>(sign) * Vec4::basis(slot);
      const Curve alpha = ternary_sum_curve({{u, v}, {u, w}}, unit_i, "alpha");
      AlphaCandidate c;
      c.slot = slot;
      c.sign = sign;
      for (int i = 0; i < grid.n; ++i) {
        const double t = grid.at(i);
        const Vec4 diff = alpha(t).p - curve_eval(printed_alpha, t).p;
        for (std::size_t k = 0; k < 4; ++k) c.max_deviation = std::max(c.max_deviation, std::abs(diff[k]));
      }
      c.matches = c.max_deviation <= kReferenceTol;
      out.push_back(c);
    }
  }
  return out;
}

CheckReport run_check(const SceneConfig& cfg, const RuledHypersurface& h, const Mesh& mesh) {
  CheckReport rep;
  rep.scene = cfg.name;
  rep.mode = cfg.mode;
  rep.dims = mesh.dims;
  rep.warnings = h.warnings();
  const auto reps = valid_reports(mesh);
  rep.degenerate_vertices = mesh.vertices.size() - reps.size();

  auto& c = rep.claims;
  if (cfg.mode == SceneMode::Type1 || cfg.mode == SceneMode::Type2) {
    c.push_back(director_claim("beta", h.beta(), h.kind(), h.box()));
    c.push_back(director_claim("gamma", h.gamma(), h.kind(), h.box()));
  } else if (cfg.mode == SceneMode::Octonion) {
    c.push_back(hypotheses_claim("construction_hypotheses",
                                 "|v| = |w| = 1 and <v,u> = <w,u> = 0 under the " +
                                     std::string(to_string(cfg.dual_norm)) + " product",
                                 h));
  } else {
    c.push_back(hypotheses_claim("dual_sphere_membership",
                                 "a + eps a* and b + eps b* lie on the unit dual sphere under the " +
                                     std::string(to_string(cfg.dual_norm)) + " product",
                                 h));
  }
  c.push_back(flatness_claim(reps));
  c.push_back(gauss_consistency_claim(h, reps));
  c.push_back(gauss_sign_claim());
  c.push_back(metric_closed_form_claim(h, reps));
  c.push_back(metric_model_claim(h, reps));
  c.push_back(minimality_link_claim(reps));
  c.push_back(minimal_claim(cfg, h, reps));
  c.push_back(lb_zero_claim(cfg, reps));
  c.push_back(lb_closed_form_claim(reps));
  c.push_back(lb_as_printed_claim(reps));

  if (cfg.mode == SceneMode::Octonion) {
    c.push_back(star_product_claim(cfg, h, mesh));
    if (cfg.reference) {
      const Interval grid = t_grid(cfg.box);
      c.push_back(reference_claim("reference_alpha", "printed base curve alpha(t)", cfg.reference->alpha,
                                  h.alpha(), grid));
      c.push_back(reference_claim("reference_ruling_s", "printed coefficient of s in phi", cfg.reference->ruling_s,
                                  h.beta(), grid));
      c.push_back(reference_claim("reference_ruling_r", "printed coefficient of r in phi", cfg.reference->ruling_r,
                                  h.gamma(), grid));
      c.push_back(alpha_probe_claim(cfg, grid));
    }
  }
  return rep;
}

CheckReport run_check(const SceneConfig& cfg, int threads) {
  const RuledHypersurface h = build_surface(cfg);
  const Mesh mesh = sample_grid(h, threads);
  return run_check(cfg, h, mesh);
}

}  // namespace ruled4
