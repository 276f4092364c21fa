// Python bindings. Rationals cross the boundary as fractions.Fraction, shapes
// as tuples of counts; reports are the CLI's JSON documents.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momhist/report.hpp"

namespace py = pybind11;
using namespace momhist;

namespace pybind11::detail {

// Fraction <-> Scalar through the exact "p/q" text form. int, str and
// Fraction are exact; float goes through its shortest repr.
template <>
struct type_caster<Scalar> {
  PYBIND11_TYPE_CASTER(Scalar, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr())) return false;
    const py::module_ fractions = py::module_::import("fractions");
    std::string text;
    if (py::isinstance(src, fractions.attr("Fraction"))) {
      text = py::str(src.attr("numerator")).cast<std::string>() + "/" +
             py::str(src.attr("denominator")).cast<std::string>();
    } else if (PyLong_Check(src.ptr()) || PyUnicode_Check(src.ptr())) {
      text = py::str(src).cast<std::string>();
    } else if (PyFloat_Check(src.ptr())) {
      text = py::repr(src).cast<std::string>();
    } else {
      return false;
    }
    try {
      value = Scalar::parse(text);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }

  static handle cast(const Scalar& x, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(x.to_ratio_string()).release();
  }
};

}  // namespace pybind11::detail

namespace {


py::tuple point_tuple(const Point& p) { return py::make_tuple(py::cast(p.t0), py::cast(p.h)); }

Shape shape_of(const std::vector<int>& counts) { return Shape(counts); }

VarianceFlavor flavor_of(const std::string& name) {
  if (name == "frequency") return VarianceFlavor::Frequency;
  if (name == "density") return VarianceFlavor::Density;
  throw std::invalid_argument("flavor must be 'frequency' or 'density'");
}

std::string dump(const report::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_momhist, m) {
  m.doc() = "Exact enumeration and classification of the histogram shapes a dataset admits";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DegenerateDataError>(m, "DegenerateDataError", base.ptr());
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());
  py::register_exception<InvalidGridError>(m, "InvalidGridError", base.ptr());
  py::register_exception<UndefinedSkewnessError>(m, "UndefinedSkewnessError", base.ptr());

  py::class_<Dataset>(m, "Dataset")
      .def(py::init([](const std::vector<Scalar>& v) {
             if (v.empty()) throw ParseError("dataset is empty", 0, 0);
             return Dataset(v);
           }),
           py::arg("values"))
      .def_property_readonly("values", [](const Dataset& d) { return std::vector<Scalar>(d.values().begin(), d.values().end()); })
      .def_property_readonly("min", &Dataset::min)
      .def_property_readonly("max", &Dataset::max)
      .def_property_readonly("mean", &Dataset::mean)
      .def_property_readonly("variance", &Dataset::variance)
      .def_property_readonly("is_symmetric", &is_exactly_symmetric)
      .def("__len__", &Dataset::size);

  m.def("parse_dataset", &parse_dataset, py::arg("text"), "Parse decimal values separated by newlines or commas.");

  py::class_<LevelSet>(m, "LevelSet")
      .def_property_readonly("shape", [](const LevelSet& l) { return py::tuple(py::cast(l.shape.counts())); })
      .def_property_readonly("vertices", [](const LevelSet& l) {
        py::list out;
        for (const auto& v : l.vertices) out.append(point_tuple(v));
        return out;
      })
      .def_readonly("h_min", &LevelSet::h_min)
      .def_readonly("h_max", &LevelSet::h_max)
      .def_readonly("area", &LevelSet::area)
      .def_property_readonly("centroid", [](const LevelSet& l) { return point_tuple(l.centroid); })
      .def("__repr__", [](const LevelSet& l) { return "<LevelSet " + l.shape.to_string() + ">"; });

  py::class_<Catalog>(m, "Catalog")
      .def_readonly("max_bins", &Catalog::max_bins)
      .def_readonly("level_sets", &Catalog::level_sets)
      .def_property_readonly("shapes", [](const Catalog& c) {
        py::list out;
        for (const auto& l : c.level_sets) out.append(py::tuple(py::cast(l.shape.counts())));
        return out;
      })
      .def("to_json", [](const Catalog& c) { return dump(report::catalog_json(c)); })
      .def("__len__", &Catalog::size);

  m.def(
      "enumerate_level_sets",
      [](const Dataset& d, int max_bins, bool exactly) {
        return enumerate_level_sets(d, max_bins, exactly ? BinCountMode::Exactly : BinCountMode::AtMost);
      },
      py::arg("data"), py::arg("max_bins"), py::arg("exactly") = false);

  m.def(
      "bin_counts",
      [](const Dataset& d, const Scalar& t0, const Scalar& h, int max_bins) {
        return py::tuple(py::cast(bin_counts(d, {t0, h, max_bins}).counts()));
      },
      py::arg("data"), py::arg("t0"), py::arg("h"), py::arg("max_bins"));

  m.def(
      "fps_grouped", [](const std::vector<int>& counts) { return fps_grouped(shape_of(counts)); }, py::arg("counts"));

  m.def(
      "solve_mom",
      [](const Dataset& d, const std::vector<int>& counts, const std::string& flavor) {
        const MomSolution s = solve_mom(d, shape_of(counts), flavor_of(flavor));
        py::dict out;
        out["t0"] = s.t0_mom;
        out["h"] = s.h_mom;
        out["h_squared"] = py::cast(s.point.h_squared);
        out["recomputed"] = py::tuple(py::cast(s.recomputed));
        out["jointly_consistent"] = s.jointly_consistent;
        return out;
      },
      py::arg("data"), py::arg("counts"), py::arg("flavor") = "frequency");

  m.def(
      "classify_json",
      [](const Dataset& d, const Catalog& c, const std::string& flavor, double band_t, double band_f) {
        const auto classes = classify_catalog(d, c, flavor_of(flavor));
        return dump(report::classification_json(c, classes, skew_rank(d, c, classes, {band_t, band_f})));
      },
      py::arg("data"), py::arg("catalog"), py::arg("flavor") = "frequency", py::arg("band_t") = 0.10,
      py::arg("band_f") = 0.05);

  m.def(
      "rank_json",
      [](const Dataset& d, const Catalog& c, const std::string& flavor) {
        const auto classes = classify_catalog(d, c, flavor_of(flavor));
        return dump(report::rank_json(skew_rank(d, c, classes), ml_rank(d, c)));
      },
      py::arg("data"), py::arg("catalog"), py::arg("flavor") = "frequency");

  m.def(
      "stability_json", [](const Catalog& c) { return dump(report::stability_json(stability_cells(c))); },
      py::arg("catalog"));

  m.def(
      "reversals_json",
      [](const Dataset& d, const Catalog& c) {
        return dump(report::reversals_json(is_exactly_symmetric(d), reversal_pairs(c), mode_inversion_report(c)));
      },
      py::arg("data"), py::arg("catalog"));

  m.def(
      "dotplot_json", [](const Dataset& d, unsigned mm) { return dump(report::dotplot_json(d, exact_moment_grid(d, mm))); },
      py::arg("data"), py::arg("m") = 1);

  m.def(
      "audit_json",
      [](const Dataset& d, const Scalar& t0, const Scalar& h, int max_bins, const std::string& flavor) {
        return dump(report::audit_json(audit(d, {t0, h, max_bins}, {flavor_of(flavor), {}})));
      },
      py::arg("data"), py::arg("t0"), py::arg("h"), py::arg("max_bins"), py::arg("flavor") = "frequency");
}
