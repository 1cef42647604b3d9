#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvex/audit.hpp"
#include "curvex/errors.hpp"
#include "curvex/report.hpp"

namespace py = pybind11;
using namespace curvex;

namespace {

// Rationals cross the boundary as (num, den) pairs; the Python side wraps them
// in fractions.Fraction.
std::pair<std::int64_t, std::int64_t> pair_of(const Rational& r) { return {r.num(), r.den()}; }

Rational from_pair(const std::pair<std::int64_t, std::int64_t>& p) { return Rational(p.first, p.second); }

FamilyDb load_db(const std::string& path) { return FamilyDb::load_file(path); }

}  // namespace

PYBIND11_MODULE(_curvex, m) {
  m.doc() = "exact curve-exclusion checks for the 95 Fano hypersurface families";

  // later registrations are tried first
  auto base = py::register_exception<Error>(m, "CurvexError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base);

  py::class_<FamilyRecord>(m, "FamilyRecord")
      .def_readonly("number", &FamilyRecord::number)
      .def_readonly("d", &FamilyRecord::d)
      .def_property_readonly("weights", [](const FamilyRecord& f) { return f.weights.values(); })
      .def_property_readonly("a_cube", [](const FamilyRecord& f) { return pair_of(f.a_cube); })
      .def("__repr__", &FamilyRecord::str);

  py::class_<FamilyDb>(m, "FamilyDb")
      .def_static("load", &load_db, py::arg("path"))
      .def("get", &FamilyDb::get, py::return_value_policy::reference_internal)
      .def("__len__", &FamilyDb::size)
      .def("records", [](const FamilyDb& db) { return db.records(); });

  m.def("derive_lists", [](const FamilyDb& db) {
    py::dict out;
    for (const auto& l : derive_lists(db)) out[py::str(l.name)] = l.derived;
    return out;
  });

  m.def("test_class_value",
        [](std::int64_t b, std::pair<std::int64_t, std::int64_t> a_cube,
           std::pair<std::int64_t, std::int64_t> deg, std::int64_t p_a) {
          return pair_of(test_class_value(b, from_pair(a_cube), from_pair(deg), p_a));
        },
        py::arg("b"), py::arg("a_cube"), py::arg("deg"), py::arg("p_a") = 0);

  m.def("different_total", [](std::vector<std::int64_t> idx) { return pair_of(different_total(idx)); });

  m.def("surface_exclusion_value",
        [](std::int64_t mult, std::pair<std::int64_t, std::int64_t> a_cube,
           std::pair<std::int64_t, std::int64_t> deg, std::pair<std::int64_t, std::int64_t> c2t) {
          return pair_of(surface_exclusion_value(mult, from_pair(a_cube), from_pair(deg), from_pair(c2t)));
        });

  m.def("full_report_json",
        [](const std::string& families, const std::string& table) {
          auto db = FamilyDb::load_file(families);
          auto rows = load_surface_rows_file(table);
          auto r = build_full_report(db, rows);
          return report::full_json(db, r).dump(2);
        },
        py::arg("families"), py::arg("table"));
}
