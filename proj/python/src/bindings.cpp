#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ruled4/check.hpp"
#include "ruled4/errors.hpp"
#include "ruled4/mesh.hpp"
#include "ruled4/octonion.hpp"

namespace py = pybind11;
using namespace ruled4;

namespace {

using Quad4 = std::array<double, 4>;

Octonion to_octonion(const std::array<double, 8>& a) { return Octonion(a); }

// JSON crosses the boundary as text; the Python side decodes it.
std::string scene_report(const SceneConfig& cfg, int threads) { return run_check(cfg, threads).to_json().dump(); }

std::string point_report(const SceneConfig& cfg, double x, double y, double z) {
  return report_to_json(curvature_report(build_surface(cfg), x, y, z)).dump();
}

std::string scene_mesh(const SceneConfig& cfg, const std::string& format, int drop_axis, int threads) {
  const Mesh m = sample_grid(build_surface(cfg), threads);
  switch (parse_mesh_format(format)) {
    case MeshFormat::Obj: return mesh_to_obj(m, drop_axis);
    case MeshFormat::Csv: return mesh_to_csv(m);
    case MeshFormat::Json: return mesh_to_json(m, run_check(cfg, build_surface(cfg), m).ledger()).dump(1) + "\n";
  }
  return {};
}

}  // namespace

PYBIND11_MODULE(_ruled4, m) {
  m.doc() = "2-ruled hypersurfaces in Minkowski 4-space";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<SyntaxError>(m, "ExpressionSyntaxError", base);
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier", base);
  py::register_exception<InconsistentSeed>(m, "InconsistentSeed", base);
  py::register_exception<NonUnitI>(m, "NonUnitI", base);
  py::register_exception<DegenerateNormal>(m, "DegenerateNormal", base);
  py::register_exception<SingularMetric>(m, "SingularMetric", base);
  py::register_exception<DirectorConstraintViolated>(m, "DirectorConstraintViolated", base);
  py::register_exception<IoError>(m, "IoError", base);
  py::register_exception<SchemaError>(m, "SchemaError", base);

  m.def("lorentz_dot", [](const Quad4& x, const Quad4& y) { return lorentz_dot(Vec4(x), Vec4(y)); });
  m.def("cross4", [](const Quad4& x, const Quad4& y, const Quad4& z) {
    return cross4(Vec4(x), Vec4(y), Vec4(z)).components();
  });
  m.def("causal_character", [](const Quad4& x) { return std::string(to_string(characterize(Vec4(x)).character)); });

  py::class_<Expr>(m, "Expr")
      .def_static("parse", &Expr::parse)
      .def("evaluate", [](const Expr& e, double t) { return e.evaluate(t); })
      .def("jet", [](const Expr& e, double t) {
        const Jet2 j = jet_eval(e, t);
        return std::make_tuple(j.f, j.d1, j.d2);
      })
      .def("dual", [](const Expr& e, double t) {
        const Dual d = dual_eval(e, t);
        return std::make_tuple(d.re, d.eps);
      })
      .def("__str__", &Expr::to_string);

  m.def(
      "octonion_table_csv",
      [](const std::array<int, 3>& seed) { return MulTable::build({seed[0], seed[1], seed[2]}).to_csv(); },
      py::arg("seed") = std::array<int, 3>{1, 2, 4});
  m.def("oct_mul", [](const std::array<double, 8>& a, const std::array<double, 8>& b) {
    return oct_mul(to_octonion(a), to_octonion(b)).coefficients();
  });

  py::class_<SceneConfig>(m, "Scene")
      .def_readonly("name", &SceneConfig::name)
      .def_readonly("description", &SceneConfig::description)
      .def_property_readonly("mode", [](const SceneConfig& c) { return std::string(to_string(c.mode)); })
      .def_readwrite("strict", &SceneConfig::strict);
  m.def("load_scene", &load_scene, py::arg("path"));
  m.def(
      "parse_scene", [](const std::string& text) { return parse_scene(nlohmann::json::parse(text)); },
      py::arg("text"));
  m.def("check_json", &scene_report, py::arg("scene"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("curvature_json", &point_report, py::arg("scene"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("mesh_text", &scene_mesh, py::arg("scene"), py::arg("format") = "obj", py::arg("drop_axis") = 0,
        py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
}
