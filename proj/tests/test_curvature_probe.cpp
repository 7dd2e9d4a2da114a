#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "archimedes/curvature.hpp"
#include "archimedes/chord.hpp"

using namespace archimedes;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("kappa_chord is exact on the parabola vertex for every h") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const CurvePoint origin = q->point_at(0.0);
    for (double h : {0.01, 0.5, 2.0, 10.0})
        CHECK(std::fabs(kappa_chord(*q, origin, h) - 2.0) < 1e-10);
}

TEST_CASE("kappa_chord finite-height bias on the circle") {
    // L = 2 sqrt(2h - h^2) gives 8h/L^2 = 2/(2-h)
    const auto circle = make_ellipse(1.0, 1.0);
    const CurvePoint pole = circle->point_at(1.5 * kPi);
    CHECK(kappa_chord(*circle, pole, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-11));
    for (double h : {0.1, 0.25, 0.8})
        CHECK(kappa_chord(*circle, pole, h) ==
              doctest::Approx(2.0 / (2.0 - h)).epsilon(1e-10));
}

TEST_CASE("kappa_chord on the non-C3 example reads 8 at the origin") {
    const auto e = make_example10();
    const CurvePoint origin = e->point_at(0.0);
    for (double h : {0.25, 1.0, 2.5})
        CHECK(std::fabs(kappa_chord(*e, origin, h) - 8.0) < 1e-10);
    const CurvatureEstimate est = kappa_extrapolated(*e, origin, 0.5, 5);
    CHECK(est.hypothesis_violated);
    CHECK(est.extrapolated == doctest::Approx(8.0).epsilon(1e-8));
}

TEST_CASE("chord ratio L/sqrt(h)") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const CurvePoint origin = q->point_at(0.0);
    for (double h : {0.2, 1.0, 3.0})
        CHECK(chord_ratio(*q, origin, h) == doctest::Approx(2.0).epsilon(1e-11));

    const auto circle = make_ellipse(1.0, 1.0);
    const CurvePoint pole = circle->point_at(1.5 * kPi);
    CHECK(std::fabs(chord_ratio(*circle, pole, 1e-6) - 2.0 * std::sqrt(2.0)) < 1e-2);

    const auto ell = make_ellipse(2.0, 1.0);
    CHECK(std::fabs(chord_ratio(*ell, ell->point_at(0.0), 1e-6) - 2.0) < 1e-2);
}

TEST_CASE("ratio^2 times kappa_hat is identically 8") {
    struct Case {
        CurvePtr curve;
        double param;
    };
    const std::vector<Case> cases = {{make_quadratic(1.0, 0.0, 0.0), 0.7},
                                     {make_ellipse(2.0, 1.0), 1.3},
                                     {make_family_curve(1.0, 0.5), -0.4}};
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> frac(0.05, 0.6);
    for (const auto& c : cases) {
        const CurvePoint p = c.curve->point_at(c.param);
        const double sup = h_max(*c.curve, p).h_max;
        for (int i = 0; i < 3; ++i) {
            const double h = sup * frac(rng);
            const double r = chord_ratio(*c.curve, p, h);
            const double k = kappa_chord(*c.curve, p, h);
            CHECK(r * r * k == doctest::Approx(8.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("extrapolated curvature: pinned example grids") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const CurvatureEstimate eq = kappa_extrapolated(*q, q->point_at(0.0), 0.5, 5);
    CHECK(std::fabs(eq.extrapolated - 2.0) < 1e-10);

    const auto circle = make_ellipse(1.0, 1.0);
    const CurvatureEstimate ec =
        kappa_extrapolated(*circle, circle->point_at(1.5 * kPi), 0.25, 6);
    CHECK(std::fabs(ec.extrapolated - 1.0) < 1e-5);
    REQUIRE(ec.analytic.has_value());
    CHECK(*ec.analytic == doctest::Approx(1.0));

    const auto fam = make_family_curve(1.0, 0.5);
    const CurvatureEstimate ef = kappa_extrapolated(*fam, fam->point_at(0.0), 0.1, 6);
    CHECK(std::fabs(ef.extrapolated - 0.25) < 1e-4);
}

TEST_CASE("extrapolated curvature matches analytic within relative 1e-4") {
    struct Case {
        CurvePtr curve;
        double param;
    };
    std::vector<Case> cases = {{make_quadratic(1.0, 0.0, 0.0), -1.0},
                               {make_quadratic(1.0, 0.0, 0.0), 0.5},
                               {make_quadratic(1.0, 0.0, 0.0), 2.0},
                               {make_ellipse(1.0, 1.0), 1.5 * kPi},
                               {make_ellipse(2.0, 1.0), 0.0},
                               {make_ellipse(2.0, 1.0), 0.5 * kPi},
                               {make_family_curve(1.0, 0.5), -1.0},
                               {make_family_curve(1.0, 0.5), 0.0},
                               {make_family_curve(1.0, 0.5), 0.4}};
    for (const auto& c : cases) {
        const CurvePoint p = c.curve->point_at(c.param);
        const CurvatureEstimate est = kappa_extrapolated(*c.curve, p);
        REQUIRE(est.rel_error.has_value());
        CHECK(*est.rel_error <= 1e-4);
    }
}

TEST_CASE("raw estimate error decreases along the default grid on C3 curves") {
    struct Case {
        CurvePtr curve;
        double param;
    };
    const std::vector<Case> cases = {{make_ellipse(1.0, 1.0), 1.5 * kPi},
                                     {make_ellipse(2.0, 1.0), 0.0}};
    for (const auto& c : cases) {
        const CurvePoint p = c.curve->point_at(c.param);
        const CurvatureEstimate est = kappa_extrapolated(*c.curve, p);
        const double kappa = *est.analytic;
        for (std::size_t j = 0; j + 1 < est.raw.size(); ++j) {
            const double e0 = std::fabs(est.raw[j] - kappa);
            const double e1 = std::fabs(est.raw[j + 1] - kappa);
            CHECK(e1 < e0);
        }
    }
}

TEST_CASE("fitted order reflects the leading error term") {
    const auto circle = make_ellipse(1.0, 1.0);
    const CurvatureEstimate est =
        kappa_extrapolated(*circle, circle->point_at(1.5 * kPi), 0.25, 6);
    // circle bias 2/(2-h) - 1 is O(h)
    CHECK(est.fitted_order == doctest::Approx(1.0).epsilon(0.2));

    // exact estimator on the parabola: differences at roundoff, order reported 0
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const CurvatureEstimate eq = kappa_extrapolated(*q, q->point_at(0.0), 0.5, 5);
    CHECK(eq.fitted_order == 0.0);
}

TEST_CASE("grid validation") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const CurvePoint origin = q->point_at(0.0);
    CHECK_THROWS_AS(kappa_extrapolated(*q, origin, 0.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(kappa_extrapolated(*q, origin, -0.1, 5), std::invalid_argument);
    CHECK_THROWS_AS(kappa_extrapolated(*q, origin, 1e-11, 6), std::domain_error);
}
