#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ruled4/curve.hpp"
#include "ruled4/dual.hpp"
#include "ruled4/lorentz.hpp"
#include "ruled4/ruled.hpp"

namespace ruled4 {

enum class SceneMode { Type1, Type2, Octonion, DualOctonion };

std::string_view to_string(SceneMode m);

// Names of the curves each mode expects, in construction order.
const std::vector<std::string>& curve_names(SceneMode m);

struct SceneClaims {
  std::optional<bool> minimal;
  std::optional<bool> laplace_beltrami_zero;
};

// Closed-form components printed alongside an octonion example: the base
// curve and the coefficients of s and r.
struct OctoReference {
  CurveSpec alpha;
  CurveSpec ruling_s;
  CurveSpec ruling_r;
};

struct SceneConfig {
  std::string name;
  std::string description;
  SceneMode mode = SceneMode::Type1;
  std::map<std::string, CurveSpec> curves;
  ParamBox box;
  bool strict = false;
  InnerProduct dual_norm = InnerProduct::Lorentz;
  Vec4 unit_i{0.0, 0.0, 0.0, 1.0};
  int projection = 0;
  SceneClaims claims;
  std::vector<std::array<double, 3>> probes;
  std::optional<OctoReference> reference;
};

// Throws IoError, SchemaError (with the JSON pointer of the offending value)
// or SyntaxError (located by the pointer of the expression string).
SceneConfig load_scene(const std::filesystem::path& path);
SceneConfig parse_scene(const nlohmann::json& doc);

// Builds the hypersurface of the scene; the octonion modes go through the
// ternary-product constructions. Strict mode may throw
// DirectorConstraintViolated; the octonion modes may throw NonUnitI.
RuledHypersurface build_surface(const SceneConfig& cfg);

}  // namespace ruled4
