#pragma once

#include <functional>
#include <string>
#include <vector>

#include "archimedes/conditions.hpp"
#include "archimedes/curve.hpp"

namespace archimedes {

// Coefficients of A x^2 + B xy + C y^2 + D x + E y + F = 0.
struct ConicCoefficients {
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0, E = 0.0, F = 0.0;

    enum class Class { ellipse, parabola, hyperbola, degenerate };

    double discriminant() const { return B * B - 4.0 * A * C; }
    // determinant of the full 3x3 symmetric matrix; zero means degenerate
    double full_determinant() const;
    Class classify() const;
    // residual of a point against the conic, scaled by the largest term
    double residual(double x, double y) const;
};

std::string to_string(ConicCoefficients::Class c);

struct FamilyParams {
    double b = 1.0;  // > 0
    double c = 0.5;  // != 0

    void validate() const;
};

// Branches of the tangent-parallel abscissa map g(x) that arise for curves
// with the 4/3 section property: x/2 (quadratics), x/4 (excluded by the
// chart conditions), and the sqrt family branch with parameter c.
enum class GBranch { half, quarter, family };

double g_branch(GBranch kind, double c, double x);

// f together with its first two derivatives, for residual substitution.
struct FunctionTriple {
    std::function<double(double)> f, df, ddf;
};

// Scale-normalized residual of the second-order ODE associated with each
// g-branch, evaluated at x for the supplied function triple.
double g_branch_ode_residual(GBranch branch, const FunctionTriple& fn, double c, double x);

// The three identities tying f and g on a chart (f(0) = f'(0) = 0) of a
// curve with the 4/3 section property: one pinning f''(g) to the area
// bracket f(x)g - x f(g), one balancing x f(x) against the bracket plus
// 2 * integral of f, and the derivative identity for f(g). All residuals are
// scale-normalized by their largest constituent term.
struct ChartIdentityResiduals {
    double g = 0.0;
    double curvature_residual = 0.0;  // x^3 f''(g) vs 8{f(x)g - x f(g)}
    double area_residual = 0.0;       // x f(x) vs (4/3){...} + 2 int f
    double tangency_residual = 0.0;   // f(g) vs g f'(x) - (3/4){x f'(x) - f(x)}
    double curvature_lhs = 0.0, curvature_rhs = 0.0;
    double area_lhs = 0.0, area_rhs = 0.0;
    double tangency_lhs = 0.0, tangency_rhs = 0.0;
};

ChartIdentityResiduals chart_identity_residuals(const GraphCurve& chart, double x);

// Implicit conic carrying the graph of the family curve.
ConicCoefficients implicit_conic(const FamilyParams& params);

struct FamilyReport {
    FamilyParams params;
    int n_samples = 0;
    ConicCoefficients conic;
    double max_conic_residual = 0.0;
    double max_ode_residual = 0.0;
    double max_curvature_residual = 0.0;
    double max_area_residual = 0.0;
    double max_tangency_residual = 0.0;
    double max_g_mismatch = 0.0;  // closed form vs root-solved, relative to |x|
    ConditionReport condition_c;
    double residual_tolerance = 1e-9;

    bool pass() const;
};

// Bundles the implicit-equation, ODE, chart-identity and g-consistency
// residuals over n samples of the family curve, plus its Condition C check.
FamilyReport verify_family_on_curve(const FamilyParams& params, int n_samples);

}  // namespace archimedes
