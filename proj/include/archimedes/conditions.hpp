#pragma once

#include <string>
#include <utility>
#include <vector>

#include "archimedes/chord.hpp"
#include "archimedes/curve.hpp"

namespace archimedes {

enum class Verdict { satisfied, violated, hypothesis_violated };

std::string to_string(Verdict v);

struct ConditionSample {
    double param = 0.0;   // point descriptor (abscissa or parameter)
    double height = 0.0;  // h, or k for the offset condition
    std::vector<std::pair<std::string, double>> values;
};

struct ConditionReport {
    char condition = 'C';
    std::string curve_label;
    std::vector<ConditionSample> samples;
    std::vector<std::pair<std::string, double>> fitted;
    double max_deviation = 0.0;
    std::size_t worst_sample = 0;
    Verdict verdict = Verdict::violated;
    double tolerance = 0.0;
    std::string note;
};

// n points uniform in parameter/abscissa, away from open domain edges.
std::vector<double> default_sample_params(const Curve& curve, int n);
// geometric heights in [h_max/2048, h_max/8], ascending.
std::vector<double> default_height_grid(double h_sup, int n);

// Section-to-triangle ratio against the constant 4/3 on an
// (n_points x n_heights) grid. The decisive parabola test.
ConditionReport check_condition_C(const Curve& curve, int n_points = 9, int n_heights = 7,
                                  double tol = 1e-6);

// S = a |PV|^{3/2} with a single curve-wide constant a; graph curves only.
ConditionReport check_condition_A(const Curve& curve, int n_points = 9, int n_heights = 7,
                                  double tol = 1e-6);

// Constant section area phi(k) across tangency points on the vertical
// offset X_k; graph curves only.
ConditionReport check_condition_B(const Curve& curve, double k, int n_points = 9,
                                  double tol = 1e-6);

struct ConditionFit {
    double a = 0.0;
    double b = 0.0;
    double residual_norm = 0.0;  // of the log-log fit
};

// Power-law fit S ~ a * triangle^b over a geometric h-grid in (0, h_max/4].
ConditionFit fit_condition_D(const Curve& curve, const CurvePoint& point, int n_heights = 8);

// Power-law fit S ~ a * |PV|^b; graph curves only.
ConditionFit fit_condition_E(const Curve& curve, const CurvePoint& point, int n_heights = 8);

// Fit-based whole-curve reports for the two power-law conditions: satisfied
// when every sampled point obeys an exact power law (residual norm <= tol).
ConditionReport check_condition_D(const Curve& curve, int n_points = 9, int n_heights = 8,
                                  double tol = 1e-6);
ConditionReport check_condition_E(const Curve& curve, int n_points = 9, int n_heights = 8,
                                  double tol = 1e-6);

enum class ParabolaVerdict { parabola, not_parabola, withheld };

std::string to_string(ParabolaVerdict v);

struct ClassificationConfig {
    int n_points = 9;
    int n_heights = 7;
    double tol = 1e-6;
};

struct ClassificationResult {
    ParabolaVerdict verdict = ParabolaVerdict::not_parabola;
    ConditionReport condition_c;
    // power-law fit evidence at representative points (graph curves)
    std::vector<std::pair<double, ConditionFit>> triangle_fits;
    std::vector<std::pair<double, ConditionFit>> foot_fits;
    std::string evidence;
};

ClassificationResult classify_parabola(const Curve& curve, const ClassificationConfig& config = {});

}  // namespace archimedes
