#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ruled4/ruled.hpp"

namespace ruled4 {

struct MeshVertex {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  // phi(x, y, z); NaN if the point itself could not be evaluated.
  std::array<double, 4> point{};
  // Absent at degenerate vertices.
  std::optional<CurvatureReport> report;
  std::vector<std::string> flags;
  std::string error;
};

// Vertices in row-major order over (x, y, z), x slowest.
struct Mesh {
  std::array<int, 3> dims{0, 0, 0};
  std::vector<MeshVertex> vertices;

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k;
  }
};

// Parallelism cap from RULED4_THREADS; hardware concurrency when unset.
int thread_count();

// Evaluates curvature_report at every grid vertex of h.box(). Degenerate
// vertices are flagged (degenerate_normal, singular_metric, domain_error)
// and never abort the grid. The result does not depend on `threads`.
Mesh sample_grid(const RuledHypersurface& h, int threads = 0);

enum class MeshFormat { Obj, Csv, Json };
MeshFormat parse_mesh_format(std::string_view name);

// %.17g with negative zero printed as 0 and NaN as "nan".
std::string format_number(double v);

nlohmann::json report_to_json(const CurvatureReport& r);

std::string mesh_to_obj(const Mesh& m, int drop_axis);
std::string mesh_to_csv(const Mesh& m);
nlohmann::json mesh_to_json(const Mesh& m, const nlohmann::json& ledger);

// Writes one of the formats above. Throws Error on an empty mesh before
// touching the file system, IoError when the file cannot be written.
void export_mesh(const Mesh& m, MeshFormat format, int drop_axis, const std::filesystem::path& out,
                 const nlohmann::json& ledger = nlohmann::json::array());

void write_text_file(const std::filesystem::path& out, const std::string& text);

}  // namespace ruled4
