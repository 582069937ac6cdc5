#include "ruled4/mesh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "ruled4/errors.hpp"

namespace ruled4 {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

json mat_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

template <class T, class F>
json optional_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

double euclid_norm(const Vec4& v) { return std::sqrt(euclid_dot(v, v)); }

void sample_vertex(const RuledHypersurface& h, MeshVertex& v) {
  try {
    v.point = eval_point(h, v.x, v.y, v.z).components();
  } catch (const DomainError& e) {
    v.point = {kNaN, kNaN, kNaN, kNaN};
    v.flags.emplace_back("domain_error");
    v.error = e.what();
    return;
  }
  try {
    v.report = curvature_report(h, v.x, v.y, v.z);
    v.flags = v.report->flags;
  } catch (const DegenerateNormal& e) {
    v.flags.emplace_back("degenerate_normal");
    v.error = e.what();
  } catch (const SingularMetric& e) {
    v.flags.emplace_back("singular_metric");
    v.error = e.what();
  } catch (const DomainError& e) {
    v.flags.emplace_back("domain_error");
    v.error = e.what();
  }
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += ';';
    out += flags[i];
  }
  return out;
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("RULED4_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min<long>(n, 1024));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Mesh sample_grid(const RuledHypersurface& h, int threads) {
  const ParamBox& box = h.box();
  Mesh m;
  m.dims = {box.x.n, box.y.n, box.z.n};
  for (int n : m.dims) {
    if (n < 2) throw std::invalid_argument("grid resolutions must be at least 2");
  }
  m.vertices.resize(static_cast<std::size_t>(m.dims[0]) * m.dims[1] * m.dims[2]);
  for (int i = 0; i < m.dims[0]; ++i) {
    for (int j = 0; j < m.dims[1]; ++j) {
      for (int k = 0; k < m.dims[2]; ++k) {
        MeshVertex& v = m.vertices[m.index(i, j, k)];
        v.x = box.x.at(i);
        v.y = box.y.at(j);
        v.z = box.z.at(k);
      }
    }
  }

  const std::size_t total = m.vertices.size();
  const std::size_t workers = std::min<std::size_t>(threads > 0 ? threads : thread_count(), total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      try {
        sample_vertex(h, m.vertices[idx]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "csv") return MeshFormat::Csv;
  if (name == "json") return MeshFormat::Json;
  throw std::invalid_argument("format must be obj, csv or json");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_to_json(const CurvatureReport& r) {
  const MetricData& m = r.metric;
  return json{
      {"x", r.x},
      {"y", r.y},
      {"z", r.z},
      {"point", vec_json(r.point)},
      {"metric",
       {{"g", mat_json(m.g)},
        {"gram", mat_json(m.gram)},
        {"a", m.a},
        {"b", m.b},
        {"c", m.c},
        {"e", m.e},
        {"detg", m.detg},
        {"detg_closed", m.detg_closed}}},
      {"gauss",
       {{"n_raw", vec_json(r.gauss.n_raw)},
        {"g", vec_json(r.gauss.g)},
        {"d", r.gauss.d},
        {"normal_character", std::string(to_string(r.gauss.normal_character))}}},
      {"h", mat_json(r.h)},
      {"shape", mat_json(r.shape)},
      {"det_h", r.det_h},
      {"K", r.K},
      {"H", r.H},
      {"H_from_residual", r.H_from_residual},
      {"minimality_residual",
       {{"value", r.residual.value},
        {"orthogonal", optional_json(r.residual.orthogonal, [](double d) { return json(d); })}}},
      {"laplace_beltrami",
       {{"general", vec_json(r.lb.general)},
        {"closed_form", optional_json(r.lb.closed_form, vec_json)},
        {"closed_form_as_printed", optional_json(r.lb.closed_form_as_printed, vec_json)}}},
      {"flags", r.flags},
  };
}

std::string mesh_to_obj(const Mesh& m, int drop_axis) {
  if (drop_axis < 0 || drop_axis > 3) throw std::invalid_argument("projection axis must be 0..3");
  std::ostringstream out;
  out << "# ruled4 projection dropping axis " << drop_axis << ", grid " << m.dims[0] << "x" << m.dims[1] << "x"
      << m.dims[2] << "\n";
  for (const MeshVertex& v : m.vertices) {
    out << 'v';
    for (int a = 0; a < 4; ++a) {
      if (a != drop_axis) out << ' ' << format_number(v.point[a]);
    }
    out << '\n';
  }
  for (int k = 0; k < m.dims[2]; ++k) {
    for (int i = 0; i + 1 < m.dims[0]; ++i) {
      for (int j = 0; j + 1 < m.dims[1]; ++j) {
        out << "f " << m.index(i, j, k) + 1 << ' ' << m.index(i + 1, j, k) + 1 << ' '
            << m.index(i + 1, j + 1, k) + 1 << ' ' << m.index(i, j + 1, k) + 1 << '\n';
      }
    }
  }
  return out.str();
}

std::string mesh_to_csv(const Mesh& m) {
  std::ostringstream out;
  out << "x,y,z,c0,c1,c2,c3,K,H,lb_norm,flags\n";
  for (const MeshVertex& v : m.vertices) {
    out << format_number(v.x) << ',' << format_number(v.y) << ',' << format_number(v.z);
    for (double c : v.point) out << ',' << format_number(c);
    const double K = v.report ? v.report->K : kNaN;
    const double H = v.report ? v.report->H : kNaN;
    const double lb = v.report ? euclid_norm(v.report->lb.general) : kNaN;
    out << ',' << format_number(K) << ',' << format_number(H) << ',' << format_number(lb) << ','
        << join_flags(v.flags) << '\n';
  }
  return out.str();
}

json mesh_to_json(const Mesh& m, const json& ledger) {
  json vertices = json::array();
  for (const MeshVertex& v : m.vertices) {
    json jv{{"x", v.x},
            {"y", v.y},
            {"z", v.z},
            {"point", json::array({v.point[0], v.point[1], v.point[2], v.point[3]})},
            {"flags", v.flags},
            {"report", v.report ? report_to_json(*v.report) : json(nullptr)}};
    if (!v.error.empty()) jv["error"] = v.error;
    vertices.push_back(std::move(jv));
  }
  return json{{"dims", m.dims}, {"vertices", std::move(vertices)}, {"ledger", ledger}};
}

void write_text_file(const std::filesystem::path& out, const std::string& text) {
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + out.string() + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + out.string() + "'");
}

void export_mesh(const Mesh& m, MeshFormat format, int drop_axis, const std::filesystem::path& out,
                 const json& ledger) {
  if (m.vertices.empty()) throw Error("cannot export an empty mesh");
  std::string text;
  switch (format) {
    case MeshFormat::Obj: text = mesh_to_obj(m, drop_axis); break;
    case MeshFormat::Csv: text = mesh_to_csv(m); break;
    case MeshFormat::Json: text = mesh_to_json(m, ledger).dump(1) + "\n"; break;
  }
  write_text_file(out, text);
}

}  // namespace ruled4
