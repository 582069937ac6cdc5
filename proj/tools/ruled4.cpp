#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruled4/check.hpp"
#include "ruled4/errors.hpp"
#include "ruled4/mesh.hpp"
#include "ruled4/octonion.hpp"
#include "ruled4/scene.hpp"

namespace fs = std::filesystem;
using namespace ruled4;

namespace {

struct Overrides {
  bool strict = false;
  std::string dual_norm;
  std::vector<double> unit_i;

  void add_to(CLI::App* cmd) {
    cmd->add_flag("--strict", strict, "Refuse construction when a director violates its constraint");
    cmd->add_option("--dual-norm", dual_norm, "Inner product for octonion hypothesis checks")
        ->check(CLI::IsMember({"lorentz", "euclid"}));
    cmd->add_option("--I", unit_i, "Unit vector I as four comma-separated numbers")->delimiter(',')->expected(4);
  }

  void apply(SceneConfig& cfg) const {
    if (strict) cfg.strict = true;
    if (!dual_norm.empty()) cfg.dual_norm = parse_inner_product(dual_norm);
    if (!unit_i.empty()) cfg.unit_i = Vec4(unit_i[0], unit_i[1], unit_i[2], unit_i[3]);
  }
};

SceneConfig load(const std::string& path, const Overrides& o) {
  SceneConfig cfg = load_scene(path);
  o.apply(cfg);
  return cfg;
}

void print_summary(const CheckReport& rep) {
  std::cout << "scene " << rep.scene << " (" << to_string(rep.mode) << "), grid " << rep.dims[0] << "x"
            << rep.dims[1] << "x" << rep.dims[2] << ", " << rep.degenerate_vertices << " degenerate\n";
  for (const auto& w : rep.warnings) std::cout << "  warning: " << w << "\n";
  for (const Claim& c : rep.claims) {
    std::printf("  %-12s %-28s %s\n", std::string(to_string(c.verdict)).c_str(), c.name.c_str(),
                c.computed.c_str());
  }
  std::cout << (rep.ok() ? "ok" : "FAILED") << "\n";
}

fs::path projection_path(const fs::path& out, int axis) {
  fs::path p = out;
  const std::string ext = p.has_extension() ? p.extension().string() : ".obj";
  p.replace_extension();
  return p.string() + "_drop" + std::to_string(axis) + ext;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ruled hypersurfaces in Minkowski 4-space"};
  app.require_subcommand(1);

  std::string scene_path, out_path, project = "scene", format = "obj";
  std::vector<int> seed;
  Overrides overrides;

  auto* check = app.add_subcommand("check", "Check the claims of a scene; exit 1 on an internal failure");
  check->add_option("scene", scene_path, "Scene JSON file")->required();
  check->add_option("--out", out_path, "Also write the JSON report here");
  overrides.add_to(check);

  auto* mesh = app.add_subcommand("mesh", "Sample the scene grid and export it");
  mesh->add_option("scene", scene_path, "Scene JSON file")->required();
  mesh->add_option("--project", project, "Dropped axis 0..3, 'all', or 'scene' for the scene's option")
      ->check(CLI::IsMember({"0", "1", "2", "3", "all", "scene"}));
  mesh->add_option("--format", format, "obj, csv or json")->check(CLI::IsMember({"obj", "csv", "json"}));
  mesh->add_option("--out", out_path, "Output file; with --project all, _dropN is inserted per axis")->required();
  overrides.add_to(mesh);

  auto* report = app.add_subcommand("report", "Write the JSON claims report");
  report->add_option("scene", scene_path, "Scene JSON file")->required();
  report->add_option("--out", out_path, "Output file")->required();
  overrides.add_to(report);

  auto* octtable = app.add_subcommand("octtable", "Write the octonion multiplication table as CSV");
  octtable->add_option("--out", out_path, "Output file")->required();
  octtable->add_option("--seed", seed, "Seed triple i,j,k with e_i e_j = e_k")->delimiter(',')->expected(3);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*octtable) {
      const ImaginaryTriple t = seed.empty() ? ImaginaryTriple{} : ImaginaryTriple{seed[0], seed[1], seed[2]};
      write_text_file(out_path, MulTable::build(t).to_csv());
      return 0;
    }

    const SceneConfig cfg = load(scene_path, overrides);
    const RuledHypersurface h = build_surface(cfg);
    const Mesh m = sample_grid(h);

    if (*check || *report) {
      const CheckReport rep = run_check(cfg, h, m);
      if (!out_path.empty()) write_text_file(out_path, rep.to_json().dump(2) + "\n");
      if (*check) {
        print_summary(rep);
        return rep.ok() ? 0 : 1;
      }
      return 0;
    }

    const MeshFormat fmt = parse_mesh_format(format);
    nlohmann::json ledger = nlohmann::json::array();
    if (fmt == MeshFormat::Json) ledger = run_check(cfg, h, m).ledger();
    if (project == "all") {
      for (int axis = 0; axis < 4; ++axis) export_mesh(m, fmt, axis, projection_path(out_path, axis), ledger);
    } else {
      const int axis = project == "scene" ? cfg.projection : std::stoi(project);
      export_mesh(m, fmt, axis, out_path, ledger);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
