#pragma once

#include <optional>

#include "archimedes/curve.hpp"

namespace archimedes {

// Tangent-parallel chord configuration at normal height h above P.
// R = h*L holds by construction and the triangle ABP has area R/2.
struct ChordSection {
    CurvePoint point;  // P
    double height = 0.0;
    Vec2 a, b;  // chord endpoints; a on the decreasing-parameter side
    double param_a = 0.0;
    double param_b = 0.0;
    double chord_length = 0.0;  // L = |AB|
    double section = 0.0;       // S, area between arc and chord
    double rectangle = 0.0;     // R = h * L
    double triangle = 0.0;      // |ABP| = R / 2
    std::optional<Vec2> foot;             // V, graph curves only
    std::optional<double> foot_distance;  // |PV| = h * W
};

struct HRange {
    CurvePoint point;
    double h_max = 0.0;
};

struct FootPoint {
    Vec2 point;
    double distance = 0.0;
};

// Chord through P + h N(P) parallel to the tangent at P, with all derived
// quantities filled. Throws std::domain_error when h is outside (0, h_max).
ChordSection chord_at_height(const Curve& curve, const CurvePoint& point, double h);

// Supremum of heights at which the chord exists inside the stored domain,
// located by bisection on chord existence (relative 1e-9).
HRange h_max(const Curve& curve, const CurvePoint& point);

// Area between the arc and the chord. Graph charts integrate (line - f) by
// adaptive Simpson; parametric arcs close the loop with the chord and use the
// shoelace line integral.
double section_area(const Curve& curve, const ChordSection& chord);

// Same area via S = integral of L(y) dy over y in (0, h); cross-checks
// section_area through an independent route.
double section_area_by_layers(const Curve& curve, const CurvePoint& point, double h);

// Intersection V of the vertical line through P with the chord; the distance
// |PV| equals h * sqrt(1 + f'(x)^2). Graph curves only.
FootPoint foot_point_V(const Curve& curve, const ChordSection& chord);

// The unique point strictly between parameters ta and tb where the tangent is
// parallel to the chord through those points.
CurvePoint tangent_parallel_point(const Curve& curve, double ta, double tb);

// For a chart f with f(0) = f'(0) = 0: abscissa g solving x f'(g) = f(x).
double solve_tangent_parallel_abscissa(const GraphCurve& chart, double x);

// Distance from the tangent-parallel point to the chord joining the chart
// origin to (x, f(x)); positive for both signs of x.
double chord_distance(const GraphCurve& chart, double x);

}  // namespace archimedes
