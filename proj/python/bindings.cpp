#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "veronormal/commands.hpp"
#include "veronormal/errors.hpp"
#include "veronormal/p1split.hpp"
#include "veronormal/serialize.hpp"
#include "veronormal/verify.hpp"

namespace py = pybind11;
namespace vn = veronormal;

// Documents cross the boundary as JSON text; the package decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact splitting types of Veronese normal bundles";

  py::register_exception<vn::MathError>(m, "MathError", PyExc_ValueError);
  py::register_exception<vn::FormatError>(m, "FormatError", PyExc_IOError);

  m.def("normal", [](int n, int d) { return vn::cmd_normal(n, d).dump(); }, py::arg("n"), py::arg("d"));
  m.def("slopes", [](int n, int d) { return vn::cmd_slopes(n, d).dump(); }, py::arg("n"), py::arg("d"));
  m.def(
      "restrict",
      [](int n, int d, const std::string& curve, std::uint64_t seed, int samples, const std::string& path) {
        return vn::cmd_restrict(n, d, vn::CurveSpec{curve, seed, path}, samples).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("curve") = "line", py::arg("seed") = 0, py::arg("samples") = 10,
      py::arg("path") = "");
  m.def(
      "splitting_type",
      [](const std::string& presentation) {
        return vn::splitting_type(vn::graded_map_from_json(vn::json::parse(presentation))).degrees;
      },
      py::arg("presentation"), "Splitting type of the cokernel of a presentation on P^1 (JSON text).");
  m.def(
      "run_criterion",
      [](const std::string& id, const std::string& scope) {
        for (const auto& c : vn::acceptance_criteria()) {
          if (c.id != id) continue;
          const auto r = vn::run_criterion(c, vn::parse_scope(scope));
          return py::make_tuple(r.passed, r.detail, r.seconds);
        }
        throw vn::MathError("unknown criterion " + id);
      },
      py::arg("id"), py::arg("scope") = "fast");
  m.def("default_seed", &vn::default_seed);
}
