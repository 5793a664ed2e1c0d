#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "fuzzyspline/bspline.hpp"
#include "fuzzyspline/commands.hpp"
#include "fuzzyspline/curve_pipeline.hpp"
#include "fuzzyspline/dataset_io.hpp"
#include "fuzzyspline/errors.hpp"
#include "fuzzyspline/fuzzy_core.hpp"
#include "fuzzyspline/fuzzy_ops.hpp"
#include "fuzzyspline/reference_example.hpp"
#include "fuzzyspline/render.hpp"

namespace py = pybind11;
namespace fs = fuzzyspline;

#ifndef FUZZYSPLINE_VERSION
#define FUZZYSPLINE_VERSION "0.1.0"
#endif

PYBIND11_MODULE(_fuzzyspline, m) {
  m.doc() = "C++ core of the fuzzyspline package";
  m.attr("__version__") = FUZZYSPLINE_VERSION;

  auto error = py::register_exception<fs::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<fs::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<fs::ArityError>(m, "ArityError", error.ptr());
  py::register_exception<fs::DegenerateChordError>(m, "DegenerateChordError", error.ptr());
  py::register_exception<fs::SolverError>(m, "SolverError", error.ptr());
  py::register_exception<fs::StageError>(m, "StageError", error.ptr());
  py::register_exception<fs::ValidationError>(m, "ValidationError", error.ptr());
  auto parse = py::register_exception<fs::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<fs::MissingKeyError>(m, "MissingKeyError", parse.ptr());

  py::class_<fs::CrispPoint>(m, "CrispPoint")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def(py::init([](const py::sequence& s) {
        if (py::len(s) != 2) throw py::value_error("a point needs exactly 2 coordinates");
        return fs::CrispPoint{s[0].cast<double>(), s[1].cast<double>()};
      }))
      .def_readwrite("x", &fs::CrispPoint::x)
      .def_readwrite("y", &fs::CrispPoint::y)
      .def("__eq__", [](const fs::CrispPoint& a, const fs::CrispPoint& b) { return a == b; })
      .def("__iter__", [](const fs::CrispPoint& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const fs::CrispPoint& p) {
        return "CrispPoint(" + fs::format_exact(p.x) + ", " + fs::format_exact(p.y) + ")";
      });
  py::implicitly_convertible<py::tuple, fs::CrispPoint>();

  py::class_<fs::FuzzyDataPoint>(m, "FuzzyDataPoint")
      .def(py::init<>())
      .def(py::init([](fs::CrispPoint ll, fs::CrispPoint l, fs::CrispPoint rl, fs::CrispPoint crisp,
                       fs::CrispPoint lr, fs::CrispPoint r, fs::CrispPoint rr) {
             return fs::FuzzyDataPoint{ll, l, rl, crisp, lr, r, rr};
           }),
           py::arg("ll"), py::arg("l"), py::arg("rl"), py::arg("crisp"), py::arg("lr"),
           py::arg("r"), py::arg("rr"))
      .def_readwrite("ll", &fs::FuzzyDataPoint::ll)
      .def_readwrite("l", &fs::FuzzyDataPoint::l)
      .def_readwrite("rl", &fs::FuzzyDataPoint::rl)
      .def_readwrite("crisp", &fs::FuzzyDataPoint::crisp)
      .def_readwrite("lr", &fs::FuzzyDataPoint::lr)
      .def_readwrite("r", &fs::FuzzyDataPoint::r)
      .def_readwrite("rr", &fs::FuzzyDataPoint::rr)
      .def("lateral", [](const fs::FuzzyDataPoint& p) {
        const auto v = p.lateral();
        return std::vector<fs::CrispPoint>(v.begin(), v.end());
      })
      .def("__eq__", [](const fs::FuzzyDataPoint& a, const fs::FuzzyDataPoint& b) { return a == b; });

  py::class_<fs::Dataset>(m, "Dataset")
      .def(py::init<>())
      .def(py::init([](std::vector<fs::FuzzyDataPoint> points, std::string label) {
             return fs::Dataset{std::move(points), std::move(label)};
           }),
           py::arg("points"), py::arg("label") = "")
      .def_readwrite("points", &fs::Dataset::points)
      .def_readwrite("label", &fs::Dataset::label)
      .def("crisp_points", &fs::Dataset::crisp_points)
      .def("__len__", [](const fs::Dataset& d) { return d.points.size(); })
      .def("__eq__", [](const fs::Dataset& a, const fs::Dataset& b) { return a == b; });

  py::class_<fs::ValidationReport>(m, "ValidationReport")
      .def_property_readonly("ok", &fs::ValidationReport::ok)
      .def_property_readonly("messages",
                             [](const fs::ValidationReport& r) {
                               std::vector<std::string> out;
                               for (const auto& v : r.violations) out.push_back(v.message);
                               return out;
                             })
      .def("__str__", &fs::ValidationReport::to_string);

  m.def("validate_point", &fs::validate_point, py::arg("point"));
  m.def("validate_dataset", &fs::validate_dataset, py::arg("dataset"));
  m.def("reference_dataset", &fs::reference_dataset);

  py::class_<fs::AlphaCutPoint>(m, "AlphaCutPoint")
      .def_readonly("point", &fs::AlphaCutPoint::point)
      .def_readonly("alpha", &fs::AlphaCutPoint::alpha);
  py::class_<fs::ReducedPoint>(m, "ReducedPoint")
      .def(py::init([](fs::CrispPoint left, fs::CrispPoint crisp, fs::CrispPoint right, double alpha) {
             return fs::ReducedPoint{left, crisp, right, alpha};
           }),
           py::arg("left"), py::arg("crisp"), py::arg("right"), py::arg("alpha") = 0.0)
      .def_readonly("left", &fs::ReducedPoint::left)
      .def_readonly("crisp", &fs::ReducedPoint::crisp)
      .def_readonly("right", &fs::ReducedPoint::right)
      .def_readonly("alpha", &fs::ReducedPoint::alpha);
  py::class_<fs::StageRecord>(m, "StageRecord")
      .def_readonly("alpha_cut", &fs::StageRecord::alpha_cut)
      .def_readonly("reduced", &fs::StageRecord::reduced)
      .def_readonly("defuzzified", &fs::StageRecord::defuzzified);

  m.def("alpha_cut", &fs::alpha_cut, py::arg("point"), py::arg("alpha"));
  m.def("type_reduce", &fs::type_reduce, py::arg("cut"));
  m.def("defuzzify", &fs::defuzzify, py::arg("reduced"));
  m.def("run_point_pipeline", &fs::run_point_pipeline, py::arg("point"), py::arg("alpha"));

  py::enum_<fs::ParamChoice>(m, "ParamChoice")
      .value("uniform", fs::ParamChoice::uniform)
      .value("chord_length", fs::ParamChoice::chord_length)
      .value("centripetal", fs::ParamChoice::centripetal);

  py::class_<fs::KnotVector>(m, "KnotVector")
      .def(py::init<int, std::vector<double>>(), py::arg("degree"), py::arg("knots"))
      .def_property_readonly("degree", &fs::KnotVector::degree)
      .def_property_readonly("knots", &fs::KnotVector::knots)
      .def_property_readonly("control_count", &fs::KnotVector::control_count);

  py::class_<fs::SplineCurve>(m, "SplineCurve")
      .def(py::init<fs::KnotVector, std::vector<fs::CrispPoint>>(), py::arg("knots"),
           py::arg("control"))
      .def_property_readonly("degree", &fs::SplineCurve::degree)
      .def_property_readonly("knots", &fs::SplineCurve::knots)
      .def_property_readonly("control", &fs::SplineCurve::control)
      .def("__call__", &fs::eval_curve, py::arg("t"));

  m.def("parametrize", [](const std::vector<fs::CrispPoint>& pts, fs::ParamChoice c) {
        return fs::parametrize(pts, c);
      }, py::arg("points"), py::arg("choice") = fs::ParamChoice::chord_length);
  m.def("average_knots", [](const std::vector<double>& params, int degree) {
        return fs::average_knots(params, degree);
      }, py::arg("params"), py::arg("degree"));
  m.def("basis", &fs::basis, py::arg("knots"), py::arg("i"), py::arg("t"));
  m.def("solve_interpolation",
        [](const std::vector<fs::CrispPoint>& data, const std::vector<double>& params,
           const fs::KnotVector& knots) { return fs::solve_interpolation(data, params, knots); },
        py::arg("data"), py::arg("params"), py::arg("knots"));
  m.def("eval_curve", &fs::eval_curve, py::arg("curve"), py::arg("t"));
  m.def("sample_curve", &fs::sample_curve, py::arg("curve"), py::arg("n_samples"));

  py::enum_<fs::Stage>(m, "Stage")
      .value("fuzzy", fs::Stage::fuzzy)
      .value("alpha_cut", fs::Stage::alpha_cut)
      .value("reduced", fs::Stage::reduced)
      .value("defuzzified", fs::Stage::defuzzified);

  py::class_<fs::ChannelCurve>(m, "ChannelCurve")
      .def_readonly("name", &fs::ChannelCurve::name)
      .def_readonly("data", &fs::ChannelCurve::data)
      .def_readonly("curve", &fs::ChannelCurve::curve);

  py::class_<fs::FuzzyCurveBundle>(m, "FuzzyCurveBundle")
      .def_property_readonly("stage", &fs::FuzzyCurveBundle::stage)
      .def_property_readonly("alpha", &fs::FuzzyCurveBundle::alpha)
      .def_property_readonly("params", &fs::FuzzyCurveBundle::params)
      .def_property_readonly("knots", &fs::FuzzyCurveBundle::knots)
      .def_property_readonly("channels", &fs::FuzzyCurveBundle::channels)
      .def("channel", &fs::FuzzyCurveBundle::channel, py::arg("name"),
           py::return_value_policy::reference_internal);

  m.def("build_bundle", &fs::build_bundle, py::arg("dataset"), py::arg("degree") = 3,
        py::arg("choice") = fs::ParamChoice::chord_length);
  m.def("apply_alpha_cut", &fs::apply_alpha_cut, py::arg("bundle"), py::arg("alpha"));
  m.def("apply_type_reduction", &fs::apply_type_reduction, py::arg("bundle"));
  m.def("apply_defuzzification", &fs::apply_defuzzification, py::arg("bundle"));

  m.def("load_dataset", &fs::load_dataset, py::arg("path"));
  m.def("save_dataset", &fs::save_dataset, py::arg("dataset"), py::arg("path"));
  m.def("parse_dataset", [](const std::string& text, std::string label) {
        return fs::parse_dataset(text, std::move(label));
      }, py::arg("text"), py::arg("label") = "");
  m.def("to_json_text", &fs::to_json_text, py::arg("dataset"));

  m.def("stage_table",
        [](const fs::Dataset& d, double alpha, const std::string& format, bool show_errata) {
          return fs::cmd_table(d, alpha, format == "csv" ? fs::TableFormat::csv : fs::TableFormat::text,
                               show_errata);
        },
        py::arg("dataset"), py::arg("alpha") = 0.5, py::arg("format") = "text",
        py::arg("show_errata") = false);
  m.def("render_svg", &fs::render_svg, py::arg("bundle"), py::arg("samples") = 200,
        py::arg("title") = "");
}
