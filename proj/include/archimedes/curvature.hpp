#pragma once

#include <optional>
#include <vector>

#include "archimedes/curve.hpp"

namespace archimedes {

// Chord-based curvature study at a point: raw estimates 8h/L^2 on a
// geometric h-grid plus the fitted h -> 0 limit.
struct CurvatureEstimate {
    CurvePoint point;
    std::vector<double> h_grid;          // decreasing
    std::vector<double> chord_lengths;   // L at each h
    std::vector<double> raw;             // 8h/L^2 at each h
    double extrapolated = 0.0;
    // log-log slope of |raw - raw_finest| vs h; 0 when the differences sit
    // at roundoff (the estimator is h-exact on parabolas)
    double fitted_order = 0.0;
    std::optional<double> analytic;
    std::optional<double> rel_error;
    bool hypothesis_violated = false;  // curve not C^3
};

// 8h / L_P(h)^2, the finite-height curvature estimate.
double kappa_chord(const Curve& curve, const CurvePoint& point, double h);

// L_P(h) / sqrt(h); tends to 2 sqrt(2) / sqrt(kappa) as h -> 0.
double chord_ratio(const Curve& curve, const CurvePoint& point, double h);

// Grid h_j = h0 4^{-j}, j = 0..levels-1, with a small-h weighted least
// squares fit of kappa_hat(h) ~ kappa + c1 sqrt(h) + c2 h.
CurvatureEstimate kappa_extrapolated(const Curve& curve, const CurvePoint& point,
                                     double h0, int levels);

// h0 = min(0.1 / kappa_hat(h_max/2), h_max/4): keeps the whole grid inside
// the chart's quadratic regime.
double default_h0(const Curve& curve, const CurvePoint& point);

CurvatureEstimate kappa_extrapolated(const Curve& curve, const CurvePoint& point);

}  // namespace archimedes
