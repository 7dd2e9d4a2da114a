#include "archimedes/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "archimedes/chord.hpp"
#include "archimedes/numerics.hpp"

namespace archimedes {

double kappa_chord(const Curve& curve, const CurvePoint& point, double h) {
    const ChordSection cs = chord_at_height(curve, point, h);
    return 8.0 * h / (cs.chord_length * cs.chord_length);
}

double chord_ratio(const Curve& curve, const CurvePoint& point, double h) {
    const ChordSection cs = chord_at_height(curve, point, h);
    return cs.chord_length / std::sqrt(h);
}

double default_h0(const Curve& curve, const CurvePoint& point) {
    const double hm = h_max(curve, point).h_max;
    const double k_mid = kappa_chord(curve, point, 0.5 * hm);
    return std::min(0.1 / k_mid, 0.25 * hm);
}

CurvatureEstimate kappa_extrapolated(const Curve& curve, const CurvePoint& point,
                                     double h0, int levels) {
    if (levels < 4) throw std::invalid_argument("kappa_extrapolated: need at least 4 levels");
    if (!(h0 > 0.0)) throw std::invalid_argument("kappa_extrapolated: h0 must be positive");
    const double k_scale = std::fabs(curve.curvature(point.param));
    const double floor = 1e-12 * (k_scale > 0.0 ? 1.0 / k_scale : 1.0);
    if (h0 * std::pow(4.0, -(levels - 1)) < floor)
        throw std::domain_error("kappa_extrapolated: grid underflows the height floor");

    CurvatureEstimate est;
    est.point = point;
    est.hypothesis_violated = !curve.c3();
    for (int j = 0; j < levels; ++j) {
        const double h = h0 * std::pow(4.0, -j);
        const ChordSection cs = chord_at_height(curve, point, h);
        est.h_grid.push_back(h);
        est.chord_lengths.push_back(cs.chord_length);
        est.raw.push_back(8.0 * h / (cs.chord_length * cs.chord_length));
    }

    // weighted least squares on {1, sqrt(h), h}; weights h^-2 so the finest
    // levels pin the intercept
    std::vector<double> a(3 * levels), w(levels);
    for (int j = 0; j < levels; ++j) {
        const double h = est.h_grid[j];
        a[3 * j] = 1.0;
        a[3 * j + 1] = std::sqrt(h);
        a[3 * j + 2] = h;
        w[j] = 1.0 / (h * h);
    }
    est.extrapolated = num::lsq_solve(a, levels, 3, est.raw, w)[0];

    // observed order from differences against the finest level
    const double finest = est.raw.back();
    const double diff_floor = 1e-12 * std::max(1.0, std::fabs(finest));
    std::vector<double> hs, ds;
    for (int j = 0; j + 1 < levels; ++j) {
        const double d = std::fabs(est.raw[j] - finest);
        if (d > diff_floor) {
            hs.push_back(est.h_grid[j]);
            ds.push_back(d);
        }
    }
    est.fitted_order = hs.size() >= 2 ? num::fit_power_law(hs, ds).exponent : 0.0;

    const double analytic = curve.curvature(point.param);
    if (std::isfinite(analytic) && analytic != 0.0) {
        est.analytic = analytic;
        est.rel_error = std::fabs(est.extrapolated - analytic) / std::fabs(analytic);
    }
    return est;
}

CurvatureEstimate kappa_extrapolated(const Curve& curve, const CurvePoint& point) {
    return kappa_extrapolated(curve, point, default_h0(curve, point), 6);
}

}  // namespace archimedes
