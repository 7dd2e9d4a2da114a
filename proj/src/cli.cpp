#include "archimedes/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "archimedes/chord.hpp"
#include "archimedes/conditions.hpp"
#include "archimedes/curvature.hpp"
#include "archimedes/curve_spec.hpp"
#include "archimedes/families.hpp"
#include "archimedes/report.hpp"

namespace archimedes {

namespace {

struct RunConfig {
    std::string command;
    std::string curve_arg;
    std::string condition;
    std::optional<double> point;
    std::optional<double> h0;
    int levels = 6;
    std::optional<double> k;
    double tol = 1e-6;
    int n_points = 9;
    int n_heights = 7;
    int n_samples = 50;
    double family_b = 1.0;
    double family_c = 0.5;
    std::string out_path;
    std::string format = "json";
};

double resolve_point(const Curve& curve, const RunConfig& cfg) {
    if (cfg.point) return *cfg.point;
    return curve.closed() ? curve.param_domain().lo : curve.param_domain().midpoint();
}

double default_offset_k(const GraphCurve& g) {
    const Interval dom = g.param_domain();
    return 1e-2 * dom.width() * dom.width() * 0.5 * g.ddf(dom.midpoint());
}

void write_config(JsonWriter& w, const RunConfig& cfg) {
    w.key("config").begin_object();
    w.field("curve", cfg.curve_arg);
    if (!cfg.condition.empty()) w.field("condition", cfg.condition);
    if (cfg.point) w.field("point", *cfg.point);
    if (cfg.h0) w.field("h0", *cfg.h0);
    w.field("levels", cfg.levels);
    if (cfg.k) w.field("k", *cfg.k);
    w.field("tol", cfg.tol);
    w.field("n_points", cfg.n_points);
    w.field("n_heights", cfg.n_heights);
    w.field("n_samples", cfg.n_samples);
    w.field("format", cfg.format);
    w.end_object();
}

std::string config_comment(const RunConfig& cfg) {
    std::string line = "# config: command=" + cfg.command + " curve=" + cfg.curve_arg;
    if (!cfg.condition.empty()) line += " condition=" + cfg.condition;
    if (cfg.point) line += " point=" + format_double(*cfg.point);
    if (cfg.h0) line += " h0=" + format_double(*cfg.h0);
    line += " levels=" + std::to_string(cfg.levels);
    if (cfg.k) line += " k=" + format_double(*cfg.k);
    line += " tol=" + format_double(cfg.tol);
    line += " n_points=" + std::to_string(cfg.n_points);
    line += " n_heights=" + std::to_string(cfg.n_heights);
    return line + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file \"" + cfg.out_path + "\"");
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return kExitSatisfied;
        case Verdict::violated: return kExitViolated;
        case Verdict::hypothesis_violated: return kExitHypothesisViolated;
    }
    return kExitUsage;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const CurvePtr curve = load_curve(cfg.curve_arg);
    const ConvexityReport convexity = check_strict_convexity(*curve, 200);

    JsonWriter w;
    w.begin_object();
    w.field("command", "analyze");
    write_config(w, cfg);
    w.field("curve", curve->label());
    w.key("convexity").begin_object();
    w.field("strictly_convex", convexity.strictly_convex);
    w.field("min_curvature", convexity.min_curvature);
    w.field("argmin", convexity.argmin);
    w.field("c3", convexity.c3);
    w.end_object();
    if (!convexity.strictly_convex) {
        // the chord machinery presumes strict convexity
        w.field("note", "curve is not strictly convex; analysis stops here");
        w.end_object();
        emit(cfg, w.str(), out);
        return kExitUsage;
    }
    ClassificationConfig cc{cfg.n_points, cfg.n_heights, cfg.tol};
    const ClassificationResult result = classify_parabola(*curve, cc);
    w.key("h_max_table").begin_array();
    for (double p : default_sample_params(*curve, cfg.n_points)) {
        const HRange r = h_max(*curve, curve->point_at(p));
        w.begin_object();
        w.field("param", p);
        w.field("h_max", r.h_max);
        w.end_object();
    }
    w.end_array();
    w.key("classification");
    write_json(w, result);
    w.end_object();
    emit(cfg, w.str(), out);

    switch (result.verdict) {
        case ParabolaVerdict::parabola: return kExitSatisfied;
        case ParabolaVerdict::not_parabola: return kExitViolated;
        case ParabolaVerdict::withheld: return kExitHypothesisViolated;
    }
    return kExitUsage;
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out) {
    const CurvePtr curve = load_curve(cfg.curve_arg);
    const double p = resolve_point(*curve, cfg);
    curve->require_interior(p);
    const CurvePoint point = curve->point_at(p);
    const double h0 = cfg.h0 ? *cfg.h0 : default_h0(*curve, point);
    const CurvatureEstimate est = kappa_extrapolated(*curve, point, h0, cfg.levels);

    if (cfg.format == "csv") {
        emit(cfg, config_comment(cfg) + curvature_estimate_csv(est), out);
    } else {
        JsonWriter w;
        w.begin_object();
        w.field("command", "curvature");
        write_config(w, cfg);
        w.field("curve", curve->label());
        w.field("h0", h0);
        w.key("estimate");
        write_json(w, est);
        w.end_object();
        emit(cfg, w.str(), out);
    }
    return kExitSatisfied;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const CurvePtr curve = load_curve(cfg.curve_arg);
    ConditionReport report;
    if (cfg.condition == "A")
        report = check_condition_A(*curve, cfg.n_points, cfg.n_heights, cfg.tol);
    else if (cfg.condition == "B") {
        const GraphCurve* g = curve->as_graph();
        if (!g) throw std::invalid_argument("condition B applies to graph curves only");
        const double k = cfg.k ? *cfg.k : default_offset_k(*g);
        report = check_condition_B(*curve, k, cfg.n_points, cfg.tol);
    } else if (cfg.condition == "C")
        report = check_condition_C(*curve, cfg.n_points, cfg.n_heights, cfg.tol);
    else if (cfg.condition == "D")
        report = check_condition_D(*curve, cfg.n_points, std::max(cfg.n_heights, 8), cfg.tol);
    else if (cfg.condition == "E")
        report = check_condition_E(*curve, cfg.n_points, std::max(cfg.n_heights, 8), cfg.tol);
    else
        throw std::invalid_argument("unknown condition \"" + cfg.condition + "\"");

    if (cfg.format == "csv") {
        emit(cfg, config_comment(cfg) + condition_report_csv(report), out);
    } else {
        JsonWriter w;
        w.begin_object();
        w.field("command", "check");
        write_config(w, cfg);
        w.key("report");
        write_json(w, report);
        w.end_object();
        emit(cfg, w.str(), out);
    }
    return verdict_exit(report.verdict);
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
    FamilyParams params{cfg.family_b, cfg.family_c};
    const FamilyReport report = verify_family_on_curve(params, cfg.n_samples);
    JsonWriter w;
    w.begin_object();
    w.field("command", "families");
    write_config(w, cfg);
    w.key("report");
    write_json(w, report);
    w.end_object();
    emit(cfg, w.str(), out);
    return report.pass() ? kExitSatisfied : kExitViolated;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tangent-parallel chord calculus for strictly convex plane curves"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* cmd, bool needs_curve) {
        if (needs_curve)
            cmd->add_option("--curve", cfg.curve_arg,
                            "curve spec file or builtin:name:key=value,...")
                ->required();
        cmd->add_option("--tol", cfg.tol, "verdict tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--n-points", cfg.n_points, "sample points along the curve")
            ->check(CLI::Range(1, 100000));
        cmd->add_option("--n-heights", cfg.n_heights, "heights per point")
            ->check(CLI::Range(2, 100000));
        cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
        cmd->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "convexity check, h_max table and parabola classification");
    add_common(analyze, true);

    CLI::App* curvature =
        app.add_subcommand("curvature", "chord-based curvature convergence study");
    add_common(curvature, true);
    double point_val = 0.0, h0_val = 0.0;
    CLI::Option* point_opt =
        curvature->add_option("--point", point_val, "abscissa or parameter of the base point");
    CLI::Option* h0_opt = curvature->add_option("--h0", h0_val, "coarsest height of the grid");
    curvature->add_option("--levels", cfg.levels, "grid levels (ratio 4)")
        ->check(CLI::Range(4, 64));

    CLI::App* check = app.add_subcommand("check", "verify one of the area conditions");
    add_common(check, true);
    check->add_option("--condition", cfg.condition, "A, B, C, D or E")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
    double k_val = 0.0;
    CLI::Option* k_opt = check->add_option("--k", k_val, "offset height for condition B");

    CLI::App* families =
        app.add_subcommand("families", "residual report for the closed-form parabola family");
    families->add_option("--b", cfg.family_b, "family coefficient b > 0")->required();
    families->add_option("--c", cfg.family_c, "family coefficient c != 0")->required();
    families->add_option("--n-samples", cfg.n_samples, "sample count")
        ->check(CLI::Range(2, 1000000));
    add_common(families, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to out and is a success
            out << app.help();
            return kExitSatisfied;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (point_opt->count()) cfg.point = point_val;
    if (h0_opt->count()) cfg.h0 = h0_val;
    if (k_opt->count()) cfg.k = k_val;

    try {
        if (analyze->parsed()) {
            cfg.command = "analyze";
            return cmd_analyze(cfg, out);
        }
        if (curvature->parsed()) {
            cfg.command = "curvature";
            return cmd_curvature(cfg, out);
        }
        if (check->parsed()) {
            cfg.command = "check";
            return cmd_check(cfg, out);
        }
        if (families->parsed()) {
            cfg.command = "families";
            return cmd_families(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace archimedes
