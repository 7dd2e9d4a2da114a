#include "archimedes/report.hpp"

#include <cmath>
#include <cstdio>

#include "archimedes/families.hpp"

namespace archimedes {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e9999" : "-1e9999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_items_.empty()) {
        if (has_items_.back()) out_ += ',';
        has_items_.back() = true;
        out_ += '\n';
        indent();
    }
}

void JsonWriter::indent() {
    out_.append(2 * has_items_.size(), ' ');
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) {
        out_ += '\n';
        indent();
    }
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) {
        out_ += '\n';
        indent();
    }
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separator();
    out_ += '"';
    out_ += name;
    out_ += "\": ";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(long(v)); }

JsonWriter& JsonWriter::value(long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    separator();
    out_ += '"';
    for (char c : v) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            default: out_ += c;
        }
    }
    out_ += '"';
    return *this;
}

void write_json(JsonWriter& w, const ConditionReport& report) {
    w.begin_object();
    w.field("condition", std::string(1, report.condition));
    w.field("curve", report.curve_label);
    w.field("verdict", to_string(report.verdict));
    w.field("max_deviation", report.max_deviation);
    w.field("tolerance", report.tolerance);
    w.key("worst_sample").value(long(report.worst_sample));
    if (!report.note.empty()) w.field("note", report.note);
    w.key("fitted").begin_object();
    for (const auto& [name, value] : report.fitted) w.field(name, value);
    w.end_object();
    w.key("samples").begin_array();
    for (const auto& s : report.samples) {
        w.begin_object();
        w.field("param", s.param);
        w.field("height", s.height);
        for (const auto& [name, value] : s.values) w.field(name, value);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_json(JsonWriter& w, const CurvatureEstimate& estimate) {
    w.begin_object();
    w.field("param", estimate.point.param);
    w.key("location").begin_array().value(estimate.point.location.x)
        .value(estimate.point.location.y).end_array();
    w.field("extrapolated", estimate.extrapolated);
    w.field("fitted_order", estimate.fitted_order);
    if (estimate.analytic) w.field("analytic", *estimate.analytic);
    if (estimate.rel_error) w.field("rel_error", *estimate.rel_error);
    w.field("hypothesis_violated", estimate.hypothesis_violated);
    w.key("levels").begin_array();
    for (std::size_t i = 0; i < estimate.h_grid.size(); ++i) {
        w.begin_object();
        w.field("h", estimate.h_grid[i]);
        w.field("chord_length", estimate.chord_lengths[i]);
        w.field("kappa_hat", estimate.raw[i]);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_json(JsonWriter& w, const ClassificationResult& result) {
    w.begin_object();
    w.field("verdict", to_string(result.verdict));
    w.field("evidence", result.evidence);
    w.key("condition_C");
    write_json(w, result.condition_c);
    auto fits = [&w](const char* name, const std::vector<std::pair<double, ConditionFit>>& v) {
        w.key(name).begin_array();
        for (const auto& [param, fit] : v) {
            w.begin_object();
            w.field("param", param);
            w.field("a", fit.a);
            w.field("b", fit.b);
            w.field("residual_norm", fit.residual_norm);
            w.end_object();
        }
        w.end_array();
    };
    fits("triangle_power_fits", result.triangle_fits);
    fits("foot_power_fits", result.foot_fits);
    w.end_object();
}

void write_json(JsonWriter& w, const FamilyReport& report) {
    w.begin_object();
    w.key("params").begin_object();
    w.field("b", report.params.b);
    w.field("c", report.params.c);
    w.end_object();
    w.key("n_samples").value(long(report.n_samples));
    w.key("conic").begin_object();
    w.field("A", report.conic.A);
    w.field("B", report.conic.B);
    w.field("C", report.conic.C);
    w.field("D", report.conic.D);
    w.field("E", report.conic.E);
    w.field("F", report.conic.F);
    w.field("discriminant", report.conic.discriminant());
    w.field("class", to_string(report.conic.classify()));
    w.end_object();
    w.key("residual_maxima").begin_object();
    w.field("implicit_conic", report.max_conic_residual);
    w.field("ode", report.max_ode_residual);
    w.field("curvature_identity", report.max_curvature_residual);
    w.field("area_identity", report.max_area_residual);
    w.field("tangency_identity", report.max_tangency_residual);
    w.field("g_mismatch", report.max_g_mismatch);
    w.end_object();
    w.field("residual_tolerance", report.residual_tolerance);
    w.field("pass", report.pass());
    w.key("condition_C");
    write_json(w, report.condition_c);
    w.end_object();
}

std::string condition_report_csv(const ConditionReport& report) {
    std::string out = "param,height";
    if (!report.samples.empty())
        for (const auto& [name, _] : report.samples.front().values) out += "," + name;
    out += '\n';
    for (const auto& s : report.samples) {
        out += format_double(s.param) + "," + format_double(s.height);
        for (const auto& [_, value] : s.values) out += "," + format_double(value);
        out += '\n';
    }
    return out;
}

std::string curvature_estimate_csv(const CurvatureEstimate& estimate) {
    std::string out = "h,L,L_over_sqrt_h,kappa_hat,analytic,abs_err\n";
    for (std::size_t i = 0; i < estimate.h_grid.size(); ++i) {
        const double h = estimate.h_grid[i];
        const double L = estimate.chord_lengths[i];
        out += format_double(h) + "," + format_double(L) + "," +
               format_double(L / std::sqrt(h)) + "," + format_double(estimate.raw[i]);
        if (estimate.analytic) {
            out += "," + format_double(*estimate.analytic) + "," +
                   format_double(std::fabs(estimate.raw[i] - *estimate.analytic));
        } else {
            out += ",,";
        }
        out += '\n';
    }
    out += "# extrapolated=" + format_double(estimate.extrapolated) +
           " fitted_order=" + format_double(estimate.fitted_order);
    if (estimate.rel_error) out += " rel_error=" + format_double(*estimate.rel_error);
    out += '\n';
    return out;
}

}  // namespace archimedes
