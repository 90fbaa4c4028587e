#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ainf/corpus.hpp"
#include "ainf/suite.hpp"

namespace py = pybind11;
using namespace ainf;

namespace {

py::object to_python(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SuiteOptions options(int max_word, int order, std::uint64_t seed, const std::string& parity) {
  SuiteOptions o;
  o.max_word = max_word;
  o.order = order;
  o.seed = seed;
  o.parity = parse_parity(parity);
  return o;
}

/// {monomial tuple: Fraction}.
py::dict potential(const AlgebraDocument& d, const std::string& kind, int order, const std::string& parity) {
  const ParityConvention p = parse_parity(parity);
  auto phi = d.shi();
  PotentialSeries s = [&] {
    if (kind == "cyclic") {
      if (!d.pairing) throw std::invalid_argument("document has no cyclic pairing");
      return potential_cyclic(*d.algebra, *d.pairing, order, p);
    }
    if (!phi) throw std::invalid_argument("document has no inner product");
    if (kind == "shi") return potential_shi(*d.algebra, *phi, order, p);
    if (kind == "psi") return potential_psi(*d.algebra, *phi, order, p);
    throw std::invalid_argument("kind must be cyclic, shi or psi");
  }();
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::dict out;
  for (const auto& [m, c] : s.series.terms()) out[py::tuple(py::cast(m))] = fraction(to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(ainf, m) {
  m.doc() = "Exact checks and potentials for finite-dimensional A-infinity algebras";
  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);

  py::class_<AlgebraDocument>(m, "Document")
      .def_static("builtin", &builtin_document, py::arg("name"))
      .def_static("load", [](const std::filesystem::path& p) { return load_file(p); }, py::arg("path"))
      .def_readonly("name", &AlgebraDocument::name)
      .def_readonly("description", &AlgebraDocument::description)
      .def_readonly("expect_fail", &AlgebraDocument::expect_fail)
      .def_property_readonly("dim", [](const AlgebraDocument& d) { return d.algebra->dim(); })
      .def_property_readonly("labels",
                             [](const AlgebraDocument& d) {
                               std::vector<std::string> out;
                               for (int i = 0; i < d.algebra->dim(); ++i) out.push_back(d.algebra->basis()->label(i));
                               return out;
                             })
      .def_property_readonly("degrees",
                             [](const AlgebraDocument& d) {
                               std::vector<int> out;
                               for (int i = 0; i < d.algebra->dim(); ++i) out.push_back(d.algebra->basis()->degree(i));
                               return out;
                             })
      .def("to_json", [](const AlgebraDocument& d) { return save_document(d).dump(2) + "\n"; })
      .def("save", [](const AlgebraDocument& d, const std::filesystem::path& p) { save_file(d, p); }, py::arg("path"))
      .def(
          "validate",
          [](const AlgebraDocument& d, int max_word) { return to_python(validate(d, options(max_word, 6, 1, "shifted")).to_json()); },
          py::arg("max_word") = 6)
      .def(
          "report",
          [](const AlgebraDocument& d, int max_word, int order, std::uint64_t seed, const std::string& parity) {
            Report r;
            {
              py::gil_scoped_release release;
              r = report_all(d, options(max_word, order, seed, parity));
            }
            return to_python(r.to_json());
          },
          py::arg("max_word") = 6, py::arg("order") = 6, py::arg("seed") = 1, py::arg("parity") = "shifted")
      .def(
          "control_failures",
          [](const AlgebraDocument& d, std::uint64_t seed) { return control_failures(d, options(6, 6, seed, "shifted")); },
          py::arg("seed") = 1)
      .def("potential", &potential, py::arg("kind") = "cyclic", py::arg("order") = 6, py::arg("parity") = "shifted");

  m.def("builtin_names", &builtin_names);
}
