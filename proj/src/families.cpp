#include "archimedes/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "archimedes/chord.hpp"
#include "archimedes/numerics.hpp"

namespace archimedes {

namespace {
double scale_residual(double lhs, double rhs, std::initializer_list<double> terms) {
    double scale = 0.0;
    for (double t : terms) scale = std::max(scale, std::fabs(t));
    scale = std::max(scale, 1e-300);
    return (lhs - rhs) / scale;
}
}  // namespace

double ConicCoefficients::full_determinant() const {
    const double m00 = A, m01 = 0.5 * B, m02 = 0.5 * D;
    const double m11 = C, m12 = 0.5 * E;
    const double m22 = F;
    return m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
           m02 * (m01 * m12 - m11 * m02);
}

ConicCoefficients::Class ConicCoefficients::classify() const {
    const double q_scale = std::max({A * A, B * B, C * C});
    const double coeff_max = std::max({std::fabs(A), std::fabs(B), std::fabs(C), std::fabs(D),
                                       std::fabs(E), std::fabs(F)});
    const bool degenerate =
        std::fabs(full_determinant()) <= 1e-12 * coeff_max * coeff_max * coeff_max;
    if (degenerate || q_scale == 0.0) return Class::degenerate;
    const double disc = discriminant();
    if (std::fabs(disc) <= 1e-12 * q_scale) return Class::parabola;
    return disc < 0.0 ? Class::ellipse : Class::hyperbola;
}

double ConicCoefficients::residual(double x, double y) const {
    const double terms[6] = {A * x * x, B * x * y, C * y * y, D * x, E * y, F};
    double scale = 1e-300, sum = 0.0;
    for (double t : terms) {
        sum += t;
        scale = std::max(scale, std::fabs(t));
    }
    return sum / scale;
}

std::string to_string(ConicCoefficients::Class c) {
    switch (c) {
        case ConicCoefficients::Class::ellipse: return "ellipse";
        case ConicCoefficients::Class::parabola: return "parabola";
        case ConicCoefficients::Class::hyperbola: return "hyperbola";
        case ConicCoefficients::Class::degenerate: return "degenerate";
    }
    return "unknown";
}

void FamilyParams::validate() const {
    if (!(b > 0.0)) throw std::invalid_argument("family params: b must be positive");
    if (c == 0.0) throw std::invalid_argument("family params: c must be nonzero");
}

double g_branch(GBranch kind, double c, double x) {
    switch (kind) {
        case GBranch::half: return 0.5 * x;
        case GBranch::quarter: return 0.25 * x;
        case GBranch::family: {
            if (c == 0.0) throw std::invalid_argument("g_branch: family branch needs c != 0");
            const double rad = 1.0 - 2.0 * c * x;
            if (rad < 0.0) throw std::domain_error("g_branch: x outside the sqrt domain");
            return (c * x + 1.0 - std::sqrt(rad)) / (4.0 * c);
        }
    }
    throw std::invalid_argument("g_branch: unknown branch");
}

double g_branch_ode_residual(GBranch branch, const FunctionTriple& fn, double c, double x) {
    const double f = fn.f(x), d1 = fn.df(x), d2 = fn.ddf(x);
    switch (branch) {
        case GBranch::half: {
            const double t1 = x * x * d2, t2 = -2.0 * x * d1, t3 = 2.0 * f;
            return scale_residual(t1 + t2 + t3, 0.0, {t1, t2, t3});
        }
        case GBranch::quarter: {
            const double t1 = 2.0 * x * x * d2, t2 = -x * d1, t3 = f;
            return scale_residual(t1 + t2 + t3, 0.0, {t1, t2, t3});
        }
        case GBranch::family: {
            if (c == 0.0)
                throw std::invalid_argument("g_branch_ode_residual: family branch needs c != 0");
            const double rad = 1.0 - 2.0 * c * x;
            if (rad < 0.0)
                throw std::domain_error("g_branch_ode_residual: x outside the sqrt domain");
            const double t1 = rad * (std::sqrt(rad) - (1.0 - c * x)) * d2;
            const double t2 = c * c * x * d1;
            const double t3 = -c * c * f;
            return scale_residual(t1 + t2 + t3, 0.0, {t1, t2, t3});
        }
    }
    throw std::invalid_argument("g_branch_ode_residual: unknown branch");
}

ChartIdentityResiduals chart_identity_residuals(const GraphCurve& chart, double x) {
    ChartIdentityResiduals r;
    r.g = solve_tangent_parallel_abscissa(chart, x);
    const double f_x = chart.f(x);
    const double f_g = chart.f(r.g);
    const double df_x = chart.df(x);
    const double ddf_g = chart.ddf(r.g);
    const double bracket = f_x * r.g - x * f_g;

    r.curvature_lhs = x * x * x * ddf_g;
    r.curvature_rhs = 8.0 * bracket;
    r.curvature_residual =
        scale_residual(r.curvature_lhs, r.curvature_rhs, {r.curvature_lhs, r.curvature_rhs});

    const double integral = num::adaptive_simpson([&chart](double t) { return chart.f(t); },
                                                  0.0, x, 1e-12, 40);
    r.area_lhs = x * f_x;
    r.area_rhs = (4.0 / 3.0) * bracket + 2.0 * integral;
    r.area_residual = scale_residual(r.area_lhs, r.area_rhs,
                                     {r.area_lhs, (4.0 / 3.0) * bracket, 2.0 * integral});

    r.tangency_lhs = f_g;
    r.tangency_rhs = r.g * df_x - 0.75 * (x * df_x - f_x);
    r.tangency_residual = scale_residual(
        r.tangency_lhs, r.tangency_rhs,
        {r.tangency_lhs, r.g * df_x, 0.75 * (x * df_x - f_x)});
    return r;
}

ConicCoefficients implicit_conic(const FamilyParams& params) {
    params.validate();
    const double b = params.b, c = params.c;
    return {b * b * c * c, 2.0 * b * c, 1.0, 0.0, -2.0 * b, 0.0};
}

bool FamilyReport::pass() const {
    const double worst = std::max({max_conic_residual, max_ode_residual, max_curvature_residual,
                                   max_area_residual, max_tangency_residual, max_g_mismatch});
    return worst <= residual_tolerance && condition_c.verdict == Verdict::satisfied;
}

FamilyReport verify_family_on_curve(const FamilyParams& params, int n_samples) {
    params.validate();
    if (n_samples < 2) throw std::invalid_argument("verify_family_on_curve: need n_samples >= 2");
    const auto curve = make_family_curve(params.b, params.c);
    FamilyReport report;
    report.params = params;
    report.n_samples = n_samples;
    report.conic = implicit_conic(params);

    FunctionTriple triple{[curve](double x) { return curve->f(x); },
                          [curve](double x) { return curve->df(x); },
                          [curve](double x) { return curve->ddf(x); }};

    const Interval dom = curve->param_domain();
    const double m = 1e-3 * dom.width();
    for (int i = 0; i < n_samples; ++i) {
        const double x = dom.lo + m + (dom.width() - 2.0 * m) * i / (n_samples - 1);
        report.max_conic_residual =
            std::max(report.max_conic_residual, std::fabs(report.conic.residual(x, curve->f(x))));
        report.max_ode_residual = std::max(
            report.max_ode_residual,
            std::fabs(g_branch_ode_residual(GBranch::family, triple, params.c, x)));
        if (std::fabs(x) > 1e-3 * dom.width()) {
            const auto ids = chart_identity_residuals(*curve, x);
            report.max_curvature_residual =
                std::max(report.max_curvature_residual, std::fabs(ids.curvature_residual));
            report.max_area_residual =
                std::max(report.max_area_residual, std::fabs(ids.area_residual));
            report.max_tangency_residual =
                std::max(report.max_tangency_residual, std::fabs(ids.tangency_residual));
            const double g_closed = g_branch(GBranch::family, params.c, x);
            report.max_g_mismatch =
                std::max(report.max_g_mismatch, std::fabs(ids.g - g_closed) / std::fabs(x));
        }
    }
    report.condition_c = check_condition_C(*curve);
    return report;
}

}  // namespace archimedes
