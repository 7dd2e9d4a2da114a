#include "archimedes/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "archimedes/numerics.hpp"

namespace archimedes {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_violated: return "hypothesis_violated";
    }
    return "unknown";
}

std::string to_string(ParabolaVerdict v) {
    switch (v) {
        case ParabolaVerdict::parabola: return "parabola";
        case ParabolaVerdict::not_parabola: return "not_parabola";
        case ParabolaVerdict::withheld: return "withheld";
    }
    return "unknown";
}

std::vector<double> default_sample_params(const Curve& curve, int n) {
    if (n < 1) throw std::invalid_argument("default_sample_params: need n >= 1");
    const Interval dom = curve.param_domain();
    std::vector<double> out;
    out.reserve(n);
    if (curve.closed()) {
        for (int i = 0; i < n; ++i) out.push_back(dom.lo + dom.width() * i / n);
    } else {
        for (int i = 0; i < n; ++i) out.push_back(dom.lo + dom.width() * (i + 1) / (n + 1));
    }
    return out;
}

std::vector<double> default_height_grid(double h_sup, int n) {
    if (n < 2) throw std::invalid_argument("default_height_grid: need n >= 2");
    const double lo = h_sup / 2048.0;
    const double hi = h_sup / 8.0;
    const double ratio = std::pow(hi / lo, 1.0 / (n - 1));
    std::vector<double> out;
    out.reserve(n);
    double h = lo;
    for (int i = 0; i < n; ++i, h *= ratio) out.push_back(h);
    return out;
}

namespace {

constexpr double kArchimedesRatio = 4.0 / 3.0;

void finalize_verdict(ConditionReport& report, const Curve& curve) {
    if (!curve.c3()) {
        report.verdict = Verdict::hypothesis_violated;
        report.note = "curve is not C^3 at every point; measurements are informational";
    } else {
        report.verdict = report.max_deviation <= report.tolerance ? Verdict::satisfied
                                                                  : Verdict::violated;
    }
}

void record_deviation(ConditionReport& report, double dev) {
    if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst_sample = report.samples.size() - 1;
    }
}

const GraphCurve& require_graph(const Curve& curve, const char* op) {
    const GraphCurve* g = curve.as_graph();
    if (!g) throw std::invalid_argument(std::string(op) + ": defined for graph curves only");
    return *g;
}

std::vector<double> fit_height_grid(double h_sup, int n) {
    // geometric, ratio 1/2, from h_sup/4 downward
    std::vector<double> out;
    out.reserve(n);
    double h = h_sup / 4.0;
    for (int i = 0; i < n; ++i, h *= 0.5) out.push_back(h);
    return out;
}

ConditionFit power_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const auto fit = num::fit_power_law(x, y);
    return {fit.coeff, fit.exponent, fit.residual_norm};
}

// shared driver for the two fit-based whole-curve reports
ConditionReport check_power_law_condition(const Curve& curve, char condition, int n_points,
                                          int n_heights, double tol, bool against_foot) {
    if (against_foot) require_graph(curve, "check_condition_E");
    ConditionReport report;
    report.condition = condition;
    report.curve_label = curve.label();
    report.tolerance = tol;
    std::vector<double> a_values, b_values;
    for (double p : default_sample_params(curve, n_points)) {
        const CurvePoint point = curve.point_at(p);
        const ConditionFit fit = against_foot ? fit_condition_E(curve, point, n_heights)
                                              : fit_condition_D(curve, point, n_heights);
        ConditionSample sample;
        sample.param = p;
        sample.values = {{"a_fit", fit.a}, {"b_fit", fit.b}, {"residual_norm", fit.residual_norm}};
        report.samples.push_back(std::move(sample));
        record_deviation(report, fit.residual_norm);
        a_values.push_back(fit.a);
        b_values.push_back(fit.b);
    }
    auto span = [](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return *hi - *lo;
    };
    const double a_mean =
        std::accumulate(a_values.begin(), a_values.end(), 0.0) / a_values.size();
    const double b_mean =
        std::accumulate(b_values.begin(), b_values.end(), 0.0) / b_values.size();
    report.fitted = {{"a_mean", a_mean},
                     {"a_spread", span(a_values) / std::fabs(a_mean)},
                     {"b_mean", b_mean},
                     {"b_spread", span(b_values)}};
    finalize_verdict(report, curve);
    return report;
}

}  // namespace

ConditionReport check_condition_C(const Curve& curve, int n_points, int n_heights, double tol) {
    ConditionReport report;
    report.condition = 'C';
    report.curve_label = curve.label();
    report.tolerance = tol;
    for (double p : default_sample_params(curve, n_points)) {
        const CurvePoint point = curve.point_at(p);
        const double h_sup = h_max(curve, point).h_max;
        for (double h : default_height_grid(h_sup, n_heights)) {
            const ChordSection cs = chord_at_height(curve, point, h);
            const double ratio = cs.section / cs.triangle;
            ConditionSample sample;
            sample.param = p;
            sample.height = h;
            sample.values = {{"ratio", ratio}, {"deviation", std::fabs(ratio - kArchimedesRatio)}};
            report.samples.push_back(std::move(sample));
            record_deviation(report, std::fabs(ratio - kArchimedesRatio));
        }
    }
    report.fitted = {{"target_ratio", kArchimedesRatio}};
    finalize_verdict(report, curve);
    return report;
}

ConditionReport check_condition_A(const Curve& curve, int n_points, int n_heights, double tol) {
    require_graph(curve, "check_condition_A");
    ConditionReport report;
    report.condition = 'A';
    report.curve_label = curve.label();
    report.tolerance = tol;
    std::vector<double> a_samples;
    for (double p : default_sample_params(curve, n_points)) {
        const CurvePoint point = curve.point_at(p);
        const double h_sup = h_max(curve, point).h_max;
        for (double h : default_height_grid(h_sup, n_heights)) {
            const ChordSection cs = chord_at_height(curve, point, h);
            const double pv = *cs.foot_distance;
            const double a_sample = cs.section / std::pow(pv, 1.5);
            ConditionSample sample;
            sample.param = p;
            sample.height = h;
            sample.values = {{"pv", pv}, {"area", cs.section}, {"a_sample", a_sample}};
            report.samples.push_back(std::move(sample));
            a_samples.push_back(a_sample);
        }
    }
    const double mean = std::accumulate(a_samples.begin(), a_samples.end(), 0.0) / a_samples.size();
    for (std::size_t i = 0; i < a_samples.size(); ++i) {
        const double dev = std::fabs(a_samples[i] - mean) / std::fabs(mean);
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_sample = i;
        }
    }
    report.fitted = {{"a", mean}};
    finalize_verdict(report, curve);
    return report;
}

ConditionReport check_condition_B(const Curve& curve, double k, int n_points, double tol) {
    const GraphCurve& g = require_graph(curve, "check_condition_B");
    if (!(k > 0.0)) throw std::invalid_argument("check_condition_B: k must be positive");
    ConditionReport report;
    report.condition = 'B';
    report.curve_label = curve.label();
    report.tolerance = tol;

    // keep only tangency abscissae whose chord stays inside the domain
    const Interval dom = curve.param_domain();
    const double m = curve.edge_margin();
    auto valid = [&](double v) {
        try {
            const CurvePoint point = curve.point_at(v);
            const double h = k / g.slope_factor(v);
            return h <= h_max(curve, point).h_max * (1.0 - 1e-6);
        } catch (const std::domain_error&) {
            return false;
        }
    };
    constexpr int kScan = 200;
    double v_lo = 0.0, v_hi = 0.0;
    bool found = false;
    for (int i = 1; i < kScan; ++i) {
        const double v = dom.lo + m + (dom.width() - 2.0 * m) * i / kScan;
        if (valid(v)) {
            if (!found) v_lo = v;
            v_hi = v;
            found = true;
        }
    }
    if (!found)
        throw std::domain_error("check_condition_B: no tangent chord fits inside the domain");
    const double shrink = 1e-3 * (v_hi - v_lo);
    v_lo += shrink;
    v_hi -= shrink;

    std::vector<double> areas;
    for (int i = 0; i < n_points; ++i) {
        const double v = n_points == 1 ? 0.5 * (v_lo + v_hi)
                                       : v_lo + (v_hi - v_lo) * i / (n_points - 1);
        const CurvePoint point = curve.point_at(v);
        const double h = k / g.slope_factor(v);
        const ChordSection cs = chord_at_height(curve, point, h);
        ConditionSample sample;
        sample.param = v;
        sample.height = k;
        sample.values = {{"h", h}, {"area", cs.section}};
        report.samples.push_back(std::move(sample));
        areas.push_back(cs.section);
    }
    const double phi = std::accumulate(areas.begin(), areas.end(), 0.0) / areas.size();
    for (std::size_t i = 0; i < areas.size(); ++i) {
        const double dev = std::fabs(areas[i] - phi) / std::fabs(phi);
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_sample = i;
        }
    }
    report.fitted = {{"phi", phi}, {"k", k}};
    finalize_verdict(report, curve);
    return report;
}

ConditionFit fit_condition_D(const Curve& curve, const CurvePoint& point, int n_heights) {
    if (n_heights < 8) throw std::invalid_argument("fit_condition_D: need at least 8 heights");
    const double h_sup = h_max(curve, point).h_max;
    std::vector<double> triangles, sections;
    for (double h : fit_height_grid(h_sup, n_heights)) {
        const ChordSection cs = chord_at_height(curve, point, h);
        triangles.push_back(cs.triangle);
        sections.push_back(cs.section);
    }
    return power_fit(triangles, sections);
}

ConditionFit fit_condition_E(const Curve& curve, const CurvePoint& point, int n_heights) {
    require_graph(curve, "fit_condition_E");
    if (n_heights < 8) throw std::invalid_argument("fit_condition_E: need at least 8 heights");
    const double h_sup = h_max(curve, point).h_max;
    std::vector<double> feet, sections;
    for (double h : fit_height_grid(h_sup, n_heights)) {
        const ChordSection cs = chord_at_height(curve, point, h);
        feet.push_back(*cs.foot_distance);
        sections.push_back(cs.section);
    }
    return power_fit(feet, sections);
}

ConditionReport check_condition_D(const Curve& curve, int n_points, int n_heights, double tol) {
    return check_power_law_condition(curve, 'D', n_points, n_heights, tol, false);
}

ConditionReport check_condition_E(const Curve& curve, int n_points, int n_heights, double tol) {
    return check_power_law_condition(curve, 'E', n_points, n_heights, tol, true);
}

ClassificationResult classify_parabola(const Curve& curve, const ClassificationConfig& config) {
    ClassificationResult result;
    result.condition_c = check_condition_C(curve, config.n_points, config.n_heights, config.tol);

    if (curve.as_graph()) {
        const Interval dom = curve.param_domain();
        for (double frac : {0.25, 0.5, 0.75}) {
            const double p = dom.lo + dom.width() * frac;
            const CurvePoint point = curve.point_at(p);
            result.triangle_fits.emplace_back(p, fit_condition_D(curve, point));
            result.foot_fits.emplace_back(p, fit_condition_E(curve, point));
        }
    }

    const ConditionSample& worst = result.condition_c.samples[result.condition_c.worst_sample];
    const double worst_ratio = worst.values.front().second;
    std::string where = "param=" + std::to_string(worst.param) +
                        ", h=" + std::to_string(worst.height);
    switch (result.condition_c.verdict) {
        case Verdict::satisfied:
            result.verdict = ParabolaVerdict::parabola;
            result.evidence = "section/triangle within " + std::to_string(config.tol) +
                              " of 4/3 on the sampled grid; worst ratio " +
                              std::to_string(worst_ratio) + " at " + where;
            break;
        case Verdict::violated:
            result.verdict = ParabolaVerdict::not_parabola;
            result.evidence = "section/triangle deviates from 4/3 by " +
                              std::to_string(result.condition_c.max_deviation) + " at " + where;
            break;
        case Verdict::hypothesis_violated:
            result.verdict = ParabolaVerdict::withheld;
            result.evidence =
                (result.condition_c.max_deviation <= config.tol
                     ? std::string("ratio condition holds on tested samples (max deviation ")
                     : std::string("ratio condition deviates on tested samples (max deviation ")) +
                std::to_string(result.condition_c.max_deviation) +
                "); curve is not C^3, classification withheld";
            break;
    }
    return result;
}

}  // namespace archimedes
