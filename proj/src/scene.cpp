#include "ruled4/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ruled4/errors.hpp"
#include "ruled4/octo_construct.hpp"

namespace ruled4 {
namespace {

using nlohmann::json;

std::string escape_token(std::string_view key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + escape_token(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const json& require_object(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw SchemaError(ptr, "expected an object");
  return v;
}

void reject_unknown(const json& obj, const std::string& ptr, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw SchemaError(child(ptr, key), "unknown key");
  }
}

double require_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw SchemaError(ptr, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(ptr, "expected a finite number");
  return d;
}

int require_int(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return v.get<int>();
}

bool require_bool(const json& v, const std::string& ptr) {
  if (!v.is_boolean()) throw SchemaError(ptr, "expected a boolean");
  return v.get<bool>();
}

std::string require_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw SchemaError(ptr, "expected a string");
  return v.get<std::string>();
}

CurveSpec parse_curve(const json& v, const std::string& ptr) {
  if (!v.is_array() || v.size() != 4) throw SchemaError(ptr, "expected an array of 4 expression strings");
  std::array<std::string, 4> texts;
  for (std::size_t i = 0; i < 4; ++i) texts[i] = require_string(v[i], child(ptr, i));
  CurveSpec spec{{Expr::number(0), Expr::number(0), Expr::number(0), Expr::number(0)}, texts};
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      spec.comp[i] = Expr::parse(texts[i]);
    } catch (const SyntaxError& e) {
      throw SyntaxError(child(ptr, i), e.offset(), e.detail());
    } catch (const UnknownIdentifier& e) {
      throw SyntaxError(child(ptr, i), e.offset(), "unknown identifier '" + e.name() + "'");
    }
  }
  return spec;
}

Interval parse_axis(const json& v, const std::string& ptr) {
  require_object(v, ptr);
  reject_unknown(v, ptr, {"min", "max", "n"});
  for (const char* key : {"min", "max", "n"}) {
    if (!v.contains(key)) throw SchemaError(child(ptr, key), "missing required key");
  }
  Interval iv;
  iv.lo = require_number(v["min"], child(ptr, "min"));
  iv.hi = require_number(v["max"], child(ptr, "max"));
  iv.n = require_int(v["n"], child(ptr, "n"));
  if (iv.n < 2) throw SchemaError(child(ptr, "n"), "resolution must be at least 2");
  if (!(iv.lo <= iv.hi)) throw SchemaError(child(ptr, "max"), "max must not be below min");
  return iv;
}

ParamBox parse_grid(const json& v, const std::string& ptr) {
  require_object(v, ptr);
  reject_unknown(v, ptr, {"x", "y", "z", "t", "s", "r"});
  ParamBox box;
  const std::array<std::pair<const char*, const char*>, 3> aliases{{{"x", "t"}, {"y", "s"}, {"z", "r"}}};
  std::array<Interval*, 3> slots{&box.x, &box.y, &box.z};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [name, alias] = aliases[i];
    if (v.contains(name) && v.contains(alias)) {
      throw SchemaError(child(ptr, alias), std::string("duplicates axis '") + name + "'");
    }
    if (v.contains(name)) *slots[i] = parse_axis(v[name], child(ptr, name));
    if (v.contains(alias)) *slots[i] = parse_axis(v[alias], child(ptr, alias));
  }
  return box;
}

}  // namespace

std::string_view to_string(SceneMode m) {
  switch (m) {
    case SceneMode::Type1: return "type1";
    case SceneMode::Type2: return "type2";
    case SceneMode::Octonion: return "octonion";
    case SceneMode::DualOctonion: return "dual-octonion";
  }
  return "?";
}

const std::vector<std::string>& curve_names(SceneMode m) {
  static const std::vector<std::string> ruled{"alpha", "beta", "gamma"};
  static const std::vector<std::string> octo{"u", "v", "w"};
  static const std::vector<std::string> dual{"a", "a_star", "b", "b_star"};
  switch (m) {
    case SceneMode::Octonion: return octo;
    case SceneMode::DualOctonion: return dual;
    default: return ruled;
  }
}

SceneConfig parse_scene(const json& doc) {
  const std::string root;
  require_object(doc, root);
  reject_unknown(doc, root,
                 {"name", "description", "mode", "curves", "grid", "options", "claims", "probes", "reference"});

  SceneConfig cfg;
  if (doc.contains("name")) cfg.name = require_string(doc["name"], "/name");
  if (doc.contains("description")) cfg.description = require_string(doc["description"], "/description");

  if (!doc.contains("mode")) throw SchemaError("/mode", "missing required key");
  const std::string mode = require_string(doc["mode"], "/mode");
  if (mode == "type1") {
    cfg.mode = SceneMode::Type1;
  } else if (mode == "type2") {
    cfg.mode = SceneMode::Type2;
  } else if (mode == "octonion") {
    cfg.mode = SceneMode::Octonion;
  } else if (mode == "dual-octonion") {
    cfg.mode = SceneMode::DualOctonion;
  } else {
    throw SchemaError("/mode", "unknown mode '" + mode + "' (expected type1, type2, octonion or dual-octonion)");
  }

  if (!doc.contains("curves")) throw SchemaError("/curves", "missing required key");
  const json& curves = require_object(doc["curves"], "/curves");
  const auto& names = curve_names(cfg.mode);
  reject_unknown(curves, "/curves", std::set<std::string>(names.begin(), names.end()));
  for (const auto& n : names) {
    if (!curves.contains(n)) throw SchemaError(child("/curves", n), "missing required curve");
    cfg.curves.emplace(n, parse_curve(curves[n], child("/curves", n)));
  }

  if (doc.contains("grid")) cfg.box = parse_grid(doc["grid"], "/grid");

  if (doc.contains("options")) {
    const json& opt = require_object(doc["options"], "/options");
    reject_unknown(opt, "/options", {"strict", "dual_norm", "I", "projection"});
    if (opt.contains("strict")) cfg.strict = require_bool(opt["strict"], "/options/strict");
    if (opt.contains("dual_norm")) {
      const std::string dn = require_string(opt["dual_norm"], "/options/dual_norm");
      try {
        cfg.dual_norm = parse_inner_product(dn);
      } catch (const std::exception&) {
        throw SchemaError("/options/dual_norm", "expected \"lorentz\" or \"euclid\"");
      }
    }
    if (opt.contains("I")) {
      const json& v = opt["I"];
      if (!v.is_array() || v.size() != 4) throw SchemaError("/options/I", "expected an array of 4 numbers");
      std::array<double, 4> c{};
      for (std::size_t i = 0; i < 4; ++i) c[i] = require_number(v[i], child("/options/I", i));
      cfg.unit_i = Vec4(c);
    }
    if (opt.contains("projection")) {
      cfg.projection = require_int(opt["projection"], "/options/projection");
      if (cfg.projection < 0 || cfg.projection > 3) {
        throw SchemaError("/options/projection", "expected an axis index 0..3");
      }
    }
  }

  if (doc.contains("claims")) {
    const json& cl = require_object(doc["claims"], "/claims");
    reject_unknown(cl, "/claims", {"minimal", "laplace_beltrami_zero"});
    if (cl.contains("minimal")) cfg.claims.minimal = require_bool(cl["minimal"], "/claims/minimal");
    if (cl.contains("laplace_beltrami_zero")) {
      cfg.claims.laplace_beltrami_zero = require_bool(cl["laplace_beltrami_zero"], "/claims/laplace_beltrami_zero");
    }
  }

  if (doc.contains("probes")) {
    const json& pr = doc["probes"];
    if (!pr.is_array()) throw SchemaError("/probes", "expected an array of [x, y, z] triples");
    for (std::size_t i = 0; i < pr.size(); ++i) {
      const std::string p = child("/probes", i);
      if (!pr[i].is_array() || pr[i].size() != 3) throw SchemaError(p, "expected [x, y, z]");
      cfg.probes.push_back({require_number(pr[i][0], child(p, 0)), require_number(pr[i][1], child(p, 1)),
                            require_number(pr[i][2], child(p, 2))});
    }
  }

  if (doc.contains("reference")) {
    if (cfg.mode != SceneMode::Octonion) throw SchemaError("/reference", "only valid in octonion mode");
    const json& ref = require_object(doc["reference"], "/reference");
    reject_unknown(ref, "/reference", {"alpha", "ruling_s", "ruling_r"});
    for (const char* key : {"alpha", "ruling_s", "ruling_r"}) {
      if (!ref.contains(key)) throw SchemaError(child("/reference", key), "missing required key");
    }
    cfg.reference = OctoReference{parse_curve(ref["alpha"], "/reference/alpha"),
                                  parse_curve(ref["ruling_s"], "/reference/ruling_s"),
                                  parse_curve(ref["ruling_r"], "/reference/ruling_r")};
  }
  return cfg;
}

SceneConfig load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scene file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scene file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  SceneConfig cfg = parse_scene(doc);
  if (cfg.name.empty()) cfg.name = path.stem().string();
  return cfg;
}

RuledHypersurface build_surface(const SceneConfig& cfg) {
  const auto curve = [&](const std::string& n) { return Curve(cfg.curves.at(n)); };
  switch (cfg.mode) {
    case SceneMode::Type1:
    case SceneMode::Type2:
      return make_ruled(curve("alpha"), curve("beta"), curve("gamma"),
                        cfg.mode == SceneMode::Type1 ? SurfaceKind::Type1 : SurfaceKind::Type2, cfg.strict,
                        cfg.box);
    case SceneMode::Octonion:
      return construct_from_octonions(curve("u"), curve("v"), curve("w"), cfg.unit_i, cfg.box, cfg.dual_norm);
    case SceneMode::DualOctonion:
      return construct_from_dual_curves(curve("a"), curve("a_star"), curve("b"), curve("b_star"), cfg.unit_i,
                                        cfg.box, cfg.dual_norm);
  }
  throw std::logic_error("unhandled scene mode");
}

}  // namespace ruled4
