#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ruled4/curve.hpp"
#include "ruled4/mesh.hpp"
#include "ruled4/ruled.hpp"
#include "ruled4/scene.hpp"

namespace ruled4 {

// pass: computed agrees with the claim (or nothing is claimed);
// fail: an internal consistency check broke;
// discrepancy: the computation contradicts a printed claim.
enum class Verdict { Pass, Fail, Discrepancy };

std::string_view to_string(Verdict v);

struct Claim {
  std::string name;
  std::string paper_claim;
  std::string computed;
  Verdict verdict = Verdict::Pass;
  nlohmann::json data = nlohmann::json::object();
};

struct CheckReport {
  std::string scene;
  SceneMode mode = SceneMode::Type1;
  std::array<int, 3> dims{0, 0, 0};
  std::size_t degenerate_vertices = 0;
  std::vector<std::string> warnings;
  std::vector<Claim> claims;

  bool ok() const;
  const Claim* find(std::string_view name) const;
  nlohmann::json to_json() const;
  // The claims array alone, as embedded into mesh JSON exports.
  nlohmann::json ledger() const;
};

// Componentwise comparison of a printed curve against a computed one on a
// t-grid: per component "match", "negated" or "mismatch", with the largest
// deviation from the computed values.
struct CurveComparison {
  std::array<std::string, 4> verdict;
  std::array<double, 4> max_deviation{};
  bool all_match() const;
};

CurveComparison compare_curves(const CurveSpec& printed, const Curve& computed, const Interval& grid);

// Base curve of the octonion construction for each signed basis vector
// +-e_k as I, compared with a printed base curve.
struct AlphaCandidate {
  int slot = 0;
  int sign = 1;
  double max_deviation = 0.0;
  bool matches = false;
};

std::vector<AlphaCandidate> probe_alpha_candidates(const Curve& u, const Curve& v, const Curve& w,
                                                   const CurveSpec& printed_alpha, const Interval& grid);

CheckReport run_check(const SceneConfig& cfg, const RuledHypersurface& h, const Mesh& mesh);
// Builds the surface, samples the grid and checks it.
CheckReport run_check(const SceneConfig& cfg, int threads = 0);

}  // namespace ruled4
