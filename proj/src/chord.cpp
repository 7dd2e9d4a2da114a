#include "archimedes/chord.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "archimedes/numerics.hpp"

namespace archimedes {

namespace {

// Height of X(t) over the tangent line at P, measured along N(P).
double normal_height(const Curve& curve, const CurvePoint& p, double t) {
    return (curve.position(t) - p.location).dot(p.normal);
}

struct SideProfile {
    double t_extreme = 0.0;  // maximizer of the normal height on this side
    double peak = 0.0;       // maximum height
};

// dir = +1 explores increasing parameters, -1 decreasing ones. For closed
// curves the sides wrap a full period so the peak is the global support
// height; for open curves they stop at the domain ends.
SideProfile side_profile(const Curve& curve, const CurvePoint& p, int dir) {
    const Interval dom = curve.param_domain();
    const double t0 = p.param;
    double t_end;
    if (curve.closed())
        t_end = t0 + dir * curve.period();
    else
        t_end = dir > 0 ? dom.hi - curve.eval_margin() : dom.lo + curve.eval_margin();
    auto height = [&curve, &p](double t) { return normal_height(curve, p, t); };
    const auto m = dir > 0 ? num::scan_max(height, t0, t_end)
                           : num::scan_max(height, t_end, t0);
    return {m.arg, m.value};
}

double curvature_length_scale(const Curve& curve, const CurvePoint& p) {
    const double k = std::fabs(curve.curvature(p.param));
    return k > 0.0 ? 1.0 / k : 1.0;
}

// Root of psi(t) = height(t) - h on one side of P. Outward march with step
// doubling, clamped at the side's height maximizer so near-supremum chords
// are still bracketed.
double side_endpoint(const Curve& curve, const CurvePoint& p, double h,
                     const SideProfile& side) {
    const double t0 = p.param;
    auto psi = [&curve, &p, h](double t) { return normal_height(curve, p, t) - h; };
    const double span = side.t_extreme - t0;  // signed
    double prev = t0, prev_val = -h;
    double step = 1e-6;
    while (true) {
        const double next = t0 + span * std::min(step, 1.0);
        if (next == prev) break;
        const double val = psi(next);
        if (val >= 0.0) {
            num::RootOptions opts;
            opts.f_tol = 1e-13 * h;  // psi ranges over (-h, peak - h)
            return prev <= next ? num::brent_root(psi, prev, next, prev_val, val, opts)
                                : num::brent_root(psi, next, prev, val, prev_val, opts);
        }
        prev = next;
        prev_val = val;
        if (step >= 1.0) break;
        step *= 2.0;
    }
    throw std::domain_error("chord_at_height: no chord at this height (h exceeds h_max)");
}

double section_area_graph(const GraphCurve& g, const ChordSection& cs) {
    const Vec2 a = cs.a, b = cs.b;
    const double slope = (b.y - a.y) / (b.x - a.x);
    auto integrand = [&g, &a, slope](double x) { return a.y + slope * (x - a.x) - g.f(x); };
    return num::adaptive_simpson(integrand, a.x, b.x, 1e-11, 40);
}

double section_area_parametric(const Curve& c, const ChordSection& cs) {
    // shoelace around arc + chord, in coordinates relative to P so the
    // integral carries no large cancelling offset
    const Vec2 p = cs.point.location;
    auto integrand = [&c, &p](double t) {
        return (c.position(t) - p).cross(c.velocity(t));
    };
    const double arc = num::adaptive_simpson(integrand, cs.param_a, cs.param_b, 1e-11, 40);
    return 0.5 * std::fabs(arc + (cs.b - p).cross(cs.a - p));
}

}  // namespace

ChordSection chord_at_height(const Curve& curve, const CurvePoint& point, double h) {
    curve.require_interior(point.param);
    if (!(h > 0.0)) throw std::domain_error("chord_at_height: h must be positive");
    if (h < 1e-12 * curvature_length_scale(curve, point))
        throw std::domain_error("chord_at_height: h below the degenerate-height floor");

    const SideProfile minus = side_profile(curve, point, -1);
    const SideProfile plus = side_profile(curve, point, +1);
    if (minus.peak < h || plus.peak < h)
        throw std::domain_error("chord_at_height: no chord at this height (h exceeds h_max)");

    ChordSection cs;
    cs.point = point;
    cs.height = h;
    cs.param_a = side_endpoint(curve, point, h, minus);
    cs.param_b = side_endpoint(curve, point, h, plus);
    cs.a = curve.position(cs.param_a);
    cs.b = curve.position(cs.param_b);
    cs.chord_length = distance(cs.a, cs.b);
    cs.rectangle = h * cs.chord_length;
    cs.triangle = 0.5 * cs.rectangle;
    cs.section = section_area(curve, cs);
    if (curve.as_graph()) {
        const double x = point.location.x;
        const double slope = (cs.b.y - cs.a.y) / (cs.b.x - cs.a.x);
        const Vec2 v{x, cs.a.y + slope * (x - cs.a.x)};
        cs.foot = v;
        cs.foot_distance = v.y - point.location.y;
    }
    return cs;
}

HRange h_max(const Curve& curve, const CurvePoint& point) {
    curve.require_interior(point.param);
    const SideProfile minus = side_profile(curve, point, -1);
    const SideProfile plus = side_profile(curve, point, +1);
    auto exists = [&minus, &plus](double h) { return h <= minus.peak && h <= plus.peak; };
    double lo = 0.0;
    double hi = 2.0 * std::min(minus.peak, plus.peak);
    if (!(hi > 0.0)) throw std::domain_error("h_max: no valid heights at this point");
    while (hi - lo > 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (exists(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {point, lo};
}

double section_area(const Curve& curve, const ChordSection& chord) {
    if (const GraphCurve* g = curve.as_graph()) return section_area_graph(*g, chord);
    return section_area_parametric(curve, chord);
}

double section_area_by_layers(const Curve& curve, const CurvePoint& point, double h) {
    if (!(h > 0.0)) throw std::domain_error("section_area_by_layers: h must be positive");
    const double floor = 1e-12 * curvature_length_scale(curve, point);
    const double kappa = curve.curvature(point.param);
    const SideProfile minus = side_profile(curve, point, -1);
    const SideProfile plus = side_profile(curve, point, +1);
    if (minus.peak < h || plus.peak < h)
        throw std::domain_error("section_area_by_layers: h exceeds h_max");
    // substitute y = s^2 so the sqrt profile of L integrates smoothly
    auto integrand = [&](double s) -> double {
        const double y = s * s;
        if (y <= floor) return 4.0 * std::sqrt(2.0 / kappa) * s * s;
        const double ta = side_endpoint(curve, point, y, minus);
        const double tb = side_endpoint(curve, point, y, plus);
        return 2.0 * s * distance(curve.position(ta), curve.position(tb));
    };
    return num::adaptive_simpson(integrand, 0.0, std::sqrt(h), 1e-9, 24);
}

FootPoint foot_point_V(const Curve& curve, const ChordSection& chord) {
    if (!curve.as_graph())
        throw std::invalid_argument("foot_point_V: defined for graph curves only");
    const double x = chord.point.location.x;
    const double slope = (chord.b.y - chord.a.y) / (chord.b.x - chord.a.x);
    const Vec2 v{x, chord.a.y + slope * (x - chord.a.x)};
    return {v, v.y - chord.point.location.y};
}

CurvePoint tangent_parallel_point(const Curve& curve, double ta, double tb) {
    if (!(tb > ta)) std::swap(ta, tb);
    const Vec2 a = curve.position(ta);
    const Vec2 b = curve.position(tb);
    const Vec2 dir = b - a;
    if (!(dir.norm() > 0.0))
        throw std::invalid_argument("tangent_parallel_point: chord endpoints coincide");
    auto fn = [&curve, &dir](double t) { return curve.velocity(t).cross(dir); };
    // strict convexity promises exactly one sign change inside the bracket
    constexpr int kScan = 64;
    int changes = 0;
    double prev = fn(ta);
    double bracket_lo = ta, bracket_hi = tb;
    for (int i = 1; i <= kScan; ++i) {
        const double t = ta + (tb - ta) * i / kScan;
        const double val = fn(t);
        if ((prev < 0.0 && val >= 0.0) || (prev > 0.0 && val <= 0.0)) {
            ++changes;
            bracket_lo = ta + (tb - ta) * (i - 1) / kScan;
            bracket_hi = t;
        }
        prev = val;
    }
    if (changes != 1)
        throw std::domain_error("tangent_parallel_point: bracket does not isolate one point");
    const double root = num::brent_root(fn, bracket_lo, bracket_hi);
    return curve.point_at(root);
}

double solve_tangent_parallel_abscissa(const GraphCurve& chart, double x) {
    const double scale = std::max(1.0, std::fabs(chart.f(x)));
    if (std::fabs(chart.f(0.0)) > 1e-9 * scale || std::fabs(chart.df(0.0)) > 1e-9)
        throw std::invalid_argument("expected a chart with f(0) = f'(0) = 0");
    if (x == 0.0) throw std::invalid_argument("chart abscissa must be nonzero");
    const double fx = chart.f(x);
    auto fn = [&chart, x, fx](double g) { return x * chart.df(g) - fx; };
    const double at_zero = -fx;                  // x f'(0) - f(x)
    const double at_x = x * chart.df(x) - fx;    // positive by convexity
    return x > 0.0 ? num::brent_root(fn, 0.0, x, at_zero, at_x)
                   : num::brent_root(fn, x, 0.0, at_x, at_zero);
}

double chord_distance(const GraphCurve& chart, double x) {
    const double g = solve_tangent_parallel_abscissa(chart, x);
    const double fx = chart.f(x);
    return std::fabs(fx * g - x * chart.f(g)) / std::hypot(x, fx);
}

}  // namespace archimedes
