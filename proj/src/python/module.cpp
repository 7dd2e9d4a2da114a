#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "archimedes/chord.hpp"
#include "archimedes/cli.hpp"
#include "archimedes/conditions.hpp"
#include "archimedes/curvature.hpp"
#include "archimedes/curve_spec.hpp"
#include "archimedes/families.hpp"
#include "archimedes/report.hpp"

namespace py = pybind11;
using namespace archimedes;

namespace {

std::string report_json(const ConditionReport& r) {
    JsonWriter w;
    write_json(w, r);
    return w.str();
}

std::string estimate_json(const CurvatureEstimate& e) {
    JsonWriter w;
    write_json(w, e);
    return w.str();
}

std::string classification_json(const ClassificationResult& r) {
    JsonWriter w;
    write_json(w, r);
    return w.str();
}

std::string family_json(const FamilyReport& r) {
    JsonWriter w;
    write_json(w, r);
    return w.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tangent-parallel chord calculus for strictly convex plane curves";

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &Vec2::x)
        .def_readonly("y", &Vec2::y)
        .def("__repr__", [](const Vec2& v) {
            std::ostringstream os;
            os << "Vec2(" << v.x << ", " << v.y << ")";
            return os.str();
        });

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("location", &CurvePoint::location)
        .def_readonly("tangent", &CurvePoint::tangent)
        .def_readonly("normal", &CurvePoint::normal)
        .def_readonly("param", &CurvePoint::param);

    py::class_<Curve, std::shared_ptr<Curve>>(m, "Curve")
        .def_property_readonly("label", &Curve::label)
        .def_property_readonly("closed", &Curve::closed)
        .def_property_readonly("c3", &Curve::c3)
        .def_property_readonly("param_domain", &Curve::param_domain)
        .def("position", &Curve::position, py::arg("t"))
        .def("point_at", &Curve::point_at, py::arg("t"))
        .def("curvature", &Curve::curvature, py::arg("t"));

    py::class_<GraphCurve, Curve, std::shared_ptr<GraphCurve>>(m, "GraphCurve")
        .def("f", &GraphCurve::f, py::arg("x"))
        .def("df", &GraphCurve::df, py::arg("x"))
        .def("ddf", &GraphCurve::ddf, py::arg("x"));

    py::class_<ParametricCurve, Curve, std::shared_ptr<ParametricCurve>>(m, "ParametricCurve");

    // std::shared_ptr<const T> and pybind holders do not mix; rebuild as
    // mutable shared_ptr (the types are immutable anyway).
    auto uncons_graph = [](std::shared_ptr<const GraphCurve> p) {
        return std::const_pointer_cast<GraphCurve>(p);
    };
    auto uncons_param = [](std::shared_ptr<const ParametricCurve> p) {
        return std::const_pointer_cast<ParametricCurve>(p);
    };
    auto uncons = [](CurvePtr p) { return std::const_pointer_cast<Curve>(p); };

    m.def("make_quadratic",
          [uncons_graph](double a, double b, double c, Interval domain) {
              return uncons_graph(make_quadratic(a, b, c, domain));
          },
          py::arg("a"), py::arg("b") = 0.0, py::arg("c") = 0.0,
          py::arg("domain") = Interval{-8.0, 8.0});
    m.def("make_family_curve",
          [uncons_graph](double b, double c) { return uncons_graph(make_family_curve(b, c)); },
          py::arg("b"), py::arg("c"));
    m.def("make_example10", [uncons_graph]() { return uncons_graph(make_example10()); });
    m.def("make_ellipse",
          [uncons_param](double a, double b) { return uncons_param(make_ellipse(a, b)); },
          py::arg("a"), py::arg("b"));
    m.def("make_offset_graph",
          [uncons_graph](std::shared_ptr<GraphCurve> base, double k) {
              return uncons_graph(make_offset_graph(base, k));
          },
          py::arg("base"), py::arg("k"));
    m.def("make_custom_poly",
          [uncons_graph](std::vector<double> coeffs, Interval domain) {
              return uncons_graph(make_custom_poly(std::move(coeffs), domain));
          },
          py::arg("coeffs"), py::arg("domain"));
    m.def("load_curve", [uncons](const std::string& arg) { return uncons(load_curve(arg)); },
          py::arg("spec"), "Load a curve from a spec file path or builtin:... string");
    m.def("curve_from_json",
          [uncons](const std::string& text) { return uncons(curve_from_json(text)); },
          py::arg("json_text"));

    m.def("curvature_analytic",
          py::overload_cast<const Curve&, double>(&curvature_analytic), py::arg("curve"),
          py::arg("t"));

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("strictly_convex", &ConvexityReport::strictly_convex)
        .def_readonly("min_curvature", &ConvexityReport::min_curvature)
        .def_readonly("argmin", &ConvexityReport::argmin)
        .def_readonly("c3", &ConvexityReport::c3);
    m.def("check_strict_convexity", &check_strict_convexity, py::arg("curve"),
          py::arg("n_samples") = 200);

    py::class_<ChordSection>(m, "ChordSection")
        .def_readonly("point", &ChordSection::point)
        .def_readonly("height", &ChordSection::height)
        .def_readonly("a", &ChordSection::a)
        .def_readonly("b", &ChordSection::b)
        .def_readonly("chord_length", &ChordSection::chord_length)
        .def_readonly("section", &ChordSection::section)
        .def_readonly("rectangle", &ChordSection::rectangle)
        .def_readonly("triangle", &ChordSection::triangle)
        .def_readonly("foot", &ChordSection::foot)
        .def_readonly("foot_distance", &ChordSection::foot_distance);

    m.def("chord_at_height", &chord_at_height, py::arg("curve"), py::arg("point"), py::arg("h"));
    m.def("chord_at_height",
          [](const Curve& curve, double t, double h) {
              return chord_at_height(curve, curve.point_at(t), h);
          },
          py::arg("curve"), py::arg("t"), py::arg("h"));
    m.def("h_max",
          [](const Curve& curve, double t) { return h_max(curve, curve.point_at(t)).h_max; },
          py::arg("curve"), py::arg("t"));
    m.def("section_area", &section_area, py::arg("curve"), py::arg("chord"));
    m.def("section_area_by_layers",
          [](const Curve& curve, double t, double h) {
              return section_area_by_layers(curve, curve.point_at(t), h);
          },
          py::arg("curve"), py::arg("t"), py::arg("h"));
    m.def("tangent_parallel_point", &tangent_parallel_point, py::arg("curve"), py::arg("ta"),
          py::arg("tb"));
    m.def("solve_tangent_parallel_abscissa", &solve_tangent_parallel_abscissa,
          py::arg("chart"), py::arg("x"));
    m.def("chord_distance", &chord_distance, py::arg("chart"), py::arg("x"));

    m.def("kappa_chord",
          [](const Curve& curve, double t, double h) {
              return kappa_chord(curve, curve.point_at(t), h);
          },
          py::arg("curve"), py::arg("t"), py::arg("h"));
    m.def("chord_ratio",
          [](const Curve& curve, double t, double h) {
              return chord_ratio(curve, curve.point_at(t), h);
          },
          py::arg("curve"), py::arg("t"), py::arg("h"));

    py::class_<CurvatureEstimate>(m, "CurvatureEstimate")
        .def_readonly("h_grid", &CurvatureEstimate::h_grid)
        .def_readonly("chord_lengths", &CurvatureEstimate::chord_lengths)
        .def_readonly("raw", &CurvatureEstimate::raw)
        .def_readonly("extrapolated", &CurvatureEstimate::extrapolated)
        .def_readonly("fitted_order", &CurvatureEstimate::fitted_order)
        .def_readonly("analytic", &CurvatureEstimate::analytic)
        .def_readonly("rel_error", &CurvatureEstimate::rel_error)
        .def_readonly("hypothesis_violated", &CurvatureEstimate::hypothesis_violated)
        .def("to_json", &estimate_json)
        .def("to_csv", &curvature_estimate_csv);
    m.def("kappa_extrapolated",
          [](const Curve& curve, double t, std::optional<double> h0, int levels) {
              const CurvePoint p = curve.point_at(t);
              return kappa_extrapolated(curve, p, h0 ? *h0 : default_h0(curve, p), levels);
          },
          py::arg("curve"), py::arg("t"), py::arg("h0") = std::nullopt, py::arg("levels") = 6);
    m.def("default_h0",
          [](const Curve& curve, double t) { return default_h0(curve, curve.point_at(t)); },
          py::arg("curve"), py::arg("t"));

    py::enum_<Verdict>(m, "Verdict")
        .value("satisfied", Verdict::satisfied)
        .value("violated", Verdict::violated)
        .value("hypothesis_violated", Verdict::hypothesis_violated);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("condition", &ConditionReport::condition)
        .def_readonly("curve_label", &ConditionReport::curve_label)
        .def_readonly("max_deviation", &ConditionReport::max_deviation)
        .def_readonly("verdict", &ConditionReport::verdict)
        .def_readonly("tolerance", &ConditionReport::tolerance)
        .def_readonly("note", &ConditionReport::note)
        .def_property_readonly("fitted",
                               [](const ConditionReport& r) {
                                   py::dict d;
                                   for (const auto& [k, v] : r.fitted) d[k.c_str()] = v;
                                   return d;
                               })
        .def("to_json", &report_json)
        .def("to_csv", &condition_report_csv);

    m.def("check_condition_A", &check_condition_A, py::arg("curve"), py::arg("n_points") = 9,
          py::arg("n_heights") = 7, py::arg("tol") = 1e-6);
    m.def("check_condition_B", &check_condition_B, py::arg("curve"), py::arg("k"),
          py::arg("n_points") = 9, py::arg("tol") = 1e-6);
    m.def("check_condition_C", &check_condition_C, py::arg("curve"), py::arg("n_points") = 9,
          py::arg("n_heights") = 7, py::arg("tol") = 1e-6);
    m.def("check_condition_D", &check_condition_D, py::arg("curve"), py::arg("n_points") = 9,
          py::arg("n_heights") = 8, py::arg("tol") = 1e-6);
    m.def("check_condition_E", &check_condition_E, py::arg("curve"), py::arg("n_points") = 9,
          py::arg("n_heights") = 8, py::arg("tol") = 1e-6);

    py::class_<ConditionFit>(m, "ConditionFit")
        .def_readonly("a", &ConditionFit::a)
        .def_readonly("b", &ConditionFit::b)
        .def_readonly("residual_norm", &ConditionFit::residual_norm);
    m.def("fit_condition_D",
          [](const Curve& curve, double t, int n_heights) {
              return fit_condition_D(curve, curve.point_at(t), n_heights);
          },
          py::arg("curve"), py::arg("t"), py::arg("n_heights") = 8);
    m.def("fit_condition_E",
          [](const Curve& curve, double t, int n_heights) {
              return fit_condition_E(curve, curve.point_at(t), n_heights);
          },
          py::arg("curve"), py::arg("t"), py::arg("n_heights") = 8);

    py::enum_<ParabolaVerdict>(m, "ParabolaVerdict")
        .value("parabola", ParabolaVerdict::parabola)
        .value("not_parabola", ParabolaVerdict::not_parabola)
        .value("withheld", ParabolaVerdict::withheld);

    py::class_<ClassificationResult>(m, "ClassificationResult")
        .def_readonly("verdict", &ClassificationResult::verdict)
        .def_readonly("evidence", &ClassificationResult::evidence)
        .def_readonly("condition_c", &ClassificationResult::condition_c)
        .def("to_json", &classification_json);
    m.def("classify_parabola",
          [](const Curve& curve, int n_points, int n_heights, double tol) {
              return classify_parabola(curve, {n_points, n_heights, tol});
          },
          py::arg("curve"), py::arg("n_points") = 9, py::arg("n_heights") = 7,
          py::arg("tol") = 1e-6);

    py::enum_<GBranch>(m, "GBranch")
        .value("half", GBranch::half)
        .value("quarter", GBranch::quarter)
        .value("family", GBranch::family);
    m.def("g_branch", &g_branch, py::arg("kind"), py::arg("c"), py::arg("x"));

    py::class_<ConicCoefficients> conic(m, "ConicCoefficients");
    conic.def_readonly("A", &ConicCoefficients::A)
        .def_readonly("B", &ConicCoefficients::B)
        .def_readonly("C", &ConicCoefficients::C)
        .def_readonly("D", &ConicCoefficients::D)
        .def_readonly("E", &ConicCoefficients::E)
        .def_readonly("F", &ConicCoefficients::F)
        .def("discriminant", &ConicCoefficients::discriminant)
        .def("classify", &ConicCoefficients::classify)
        .def("residual", &ConicCoefficients::residual, py::arg("x"), py::arg("y"));
    py::enum_<ConicCoefficients::Class>(conic, "Class")
        .value("ellipse", ConicCoefficients::Class::ellipse)
        .value("parabola", ConicCoefficients::Class::parabola)
        .value("hyperbola", ConicCoefficients::Class::hyperbola)
        .value("degenerate", ConicCoefficients::Class::degenerate);

    py::class_<FamilyParams>(m, "FamilyParams")
        .def(py::init<double, double>(), py::arg("b"), py::arg("c"))
        .def_readonly("b", &FamilyParams::b)
        .def_readonly("c", &FamilyParams::c);
    m.def("implicit_conic", &implicit_conic, py::arg("params"));
    m.def("implicit_conic",
          [](double b, double c) { return implicit_conic({b, c}); }, py::arg("b"), py::arg("c"));

    py::class_<ChartIdentityResiduals>(m, "ChartIdentityResiduals")
        .def_readonly("g", &ChartIdentityResiduals::g)
        .def_readonly("curvature_residual", &ChartIdentityResiduals::curvature_residual)
        .def_readonly("area_residual", &ChartIdentityResiduals::area_residual)
        .def_readonly("tangency_residual", &ChartIdentityResiduals::tangency_residual);
    m.def("chart_identity_residuals", &chart_identity_residuals, py::arg("chart"), py::arg("x"));

    py::class_<FamilyReport>(m, "FamilyReport")
        .def_readonly("max_conic_residual", &FamilyReport::max_conic_residual)
        .def_readonly("max_ode_residual", &FamilyReport::max_ode_residual)
        .def_readonly("max_curvature_residual", &FamilyReport::max_curvature_residual)
        .def_readonly("max_area_residual", &FamilyReport::max_area_residual)
        .def_readonly("max_tangency_residual", &FamilyReport::max_tangency_residual)
        .def_readonly("max_g_mismatch", &FamilyReport::max_g_mismatch)
        .def_readonly("condition_c", &FamilyReport::condition_c)
        .def("pass_", &FamilyReport::pass)
        .def("to_json", &family_json);
    m.def("verify_family_on_curve",
          [](double b, double c, int n_samples) {
              return verify_family_on_curve({b, c}, n_samples);
          },
          py::arg("b"), py::arg("c"), py::arg("n_samples") = 50);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
