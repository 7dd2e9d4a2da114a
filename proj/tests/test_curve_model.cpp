#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <functional>
#include <limits>
#include <random>

#include "archimedes/curve.hpp"
#include "archimedes/numerics.hpp"

using namespace archimedes;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("make_quadratic builds y = ax^2 + bx + c with analytic derivatives") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    CHECK(q->f(2.0) == 4.0);
    CHECK(q->df(3.0) == 6.0);
    CHECK(q->ddf(-1.0) == 2.0);
    CHECK(curvature_analytic(*q, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    // kappa = f'' / W^3 at x = 1, W = sqrt(5)
    CHECK(curvature_analytic(*q, 1.0) ==
          doctest::Approx(2.0 / std::pow(5.0, 1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(make_quadratic(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_quadratic(-2.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("family curve matches its closed-form values") {
    const auto f = make_family_curve(1.0, 0.5);
    CHECK(f->f(0.75) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(f->f(0.0) == doctest::Approx(0.0));
    CHECK(f->df(0.0) == doctest::Approx(0.0));
    CHECK(f->ddf(0.0) == doctest::Approx(0.25).epsilon(1e-15));  // b c^2
    // f'''(0) = 3 b c^3 via central difference of ddf
    const double step = 1e-5;
    const double d3 = (f->ddf(step) - f->ddf(-step)) / (2.0 * step);
    CHECK(d3 == doctest::Approx(3.0 / 8.0).epsilon(1e-6));
    CHECK(f->param_domain().hi == doctest::Approx(1.0));
    CHECK(curvature_analytic(*f, 0.0) == doctest::Approx(0.25).epsilon(1e-14));

    const auto m = make_family_curve(2.0, -1.0);  // mirrored domain
    CHECK(m->param_domain().lo == doctest::Approx(-0.5));
    CHECK(m->ddf(0.0) == doctest::Approx(2.0));  // b c^2 = 2

    CHECK_THROWS_AS(make_family_curve(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_family_curve(-1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_family_curve(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("example10 is the piecewise counterexample, flagged non-C3") {
    const auto e = make_example10();
    CHECK(e->f(-1.0) == 9.0);
    CHECK(e->f(1.0) == 2.25);
    CHECK(e->f(0.0) == 0.0);
    CHECK(e->df(-1e-12) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(e->df(1e-12) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(e->ddf(-1e-12) == 18.0);
    CHECK(e->ddf(1e-12) == 4.5);
    CHECK_FALSE(e->c3());
}

TEST_CASE("ellipse curvature at the axis points") {
    const auto circle = make_ellipse(1.0, 1.0);
    for (double t : {0.0, 1.1, 3.0, 5.2})
        CHECK(curvature_analytic(*circle, t) == doctest::Approx(1.0).epsilon(1e-14));
    const auto e = make_ellipse(2.0, 1.0);
    CHECK(curvature_analytic(*e, 0.0) == doctest::Approx(2.0).epsilon(1e-14));      // a/b^2
    CHECK(curvature_analytic(*e, kPi / 2.0) == doctest::Approx(0.25).epsilon(1e-14));  // b/a^2
    CHECK_THROWS_AS(make_ellipse(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_ellipse(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("offset graph shifts values and keeps derivatives") {
    const auto base = make_quadratic(1.0, 0.0, 0.0);
    const auto off = make_offset_graph(base, 1.0);
    CHECK(off->f(2.0) == 5.0);
    CHECK(off->ddf(0.3) == base->ddf(0.3));
    CHECK(off->df(0.7) == doctest::Approx(1.4));
    CHECK_THROWS_AS(make_offset_graph(base, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_offset_graph(base, -1.0), std::invalid_argument);
}

TEST_CASE("analytic derivatives agree with finite differences on a 100-point grid") {
    const std::vector<std::shared_ptr<const GraphCurve>> graphs = {
        make_quadratic(1.0, 0.0, 0.0), make_quadratic(2.5, -1.0, 0.5),
        make_family_curve(1.0, 0.5), make_family_curve(2.0, -1.0)};
    // second differences use an eps^(1/4) step: the function values grow like
    // x^2, so the eps^(1/3) fallback step sits on a ~1e-5 rounding floor
    auto second_diff = [](const std::function<double(double)>& fn, double x) {
        const double step =
            std::pow(std::numeric_limits<double>::epsilon(), 0.25) * std::max(1.0, std::fabs(x));
        return (fn(x + step) - 2.0 * fn(x) + fn(x - step)) / (step * step);
    };
    for (const auto& g : graphs) {
        const Interval dom = g->param_domain();
        const double m = 0.02 * dom.width();
        for (int i = 0; i < 100; ++i) {
            const double x = dom.lo + m + (dom.width() - 2.0 * m) * i / 99.0;
            auto fn = [&g](double t) { return g->f(t); };
            const double d1 = num::fd_derivative(fn, x, dom.lo, dom.hi);
            const double d2 = second_diff(fn, x);
            CHECK(std::fabs(d1 - g->df(x)) <= 1e-6 * std::max(1.0, std::fabs(g->df(x))));
            CHECK(std::fabs(d2 - g->ddf(x)) <= 1e-6 * std::max(1.0, std::fabs(g->ddf(x))));
        }
    }
    // parametric: velocity/acceleration against position differences
    const auto e = make_ellipse(2.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double t = 2.0 * kPi * i / 100.0;
        const double step = std::sqrt(std::numeric_limits<double>::epsilon());
        const Vec2 fd = (e->position(t + step) - e->position(t - step)) / (2.0 * step);
        CHECK(distance(fd, e->velocity(t)) <= 1e-6 * std::max(1.0, e->velocity(t).norm()));
    }
}

TEST_CASE("finite-difference fallback fills missing derivatives") {
    GraphCurve bare({-2.0, 2.0}, [](double x) { return x * x; });
    CHECK_FALSE(bare.has_analytic_derivatives());
    CHECK(bare.df(0.5) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(bare.ddf(0.5) == doctest::Approx(2.0).epsilon(1e-6));
    bare.set_fd_fallback(false);
    CHECK_THROWS_AS(bare.df(0.5), std::domain_error);
    CHECK_THROWS_AS(bare.ddf(0.5), std::domain_error);
}

TEST_CASE("local chart of y = x^2 at the origin is the identity chart") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const LocalChart chart = local_chart(q, q->point_at(0.0));
    CHECK(chart.rotation_angle() == doctest::Approx(0.0));
    CHECK(chart.value(0.5) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(chart.value(-1.25) == doctest::Approx(1.5625).epsilon(1e-13));
}

TEST_CASE("local chart of the unit circle at the bottom pole") {
    const auto circle = make_ellipse(1.0, 1.0);
    const CurvePoint pole = circle->point_at(1.5 * kPi);  // (0, -1), convex side up
    CHECK(pole.normal.y == doctest::Approx(1.0).epsilon(1e-14));
    const LocalChart chart = local_chart(circle, pole);
    for (double u : {0.3, -0.45, 0.7})
        CHECK(chart.value(u) == doctest::Approx(1.0 - std::sqrt(1.0 - u * u)).epsilon(1e-10));
}

TEST_CASE("chart round-trip lands back on the curve") {
    struct Case {
        CurvePtr curve;
        double param;
    };
    const std::vector<Case> cases = {{make_quadratic(1.0, 0.0, 0.0), 1.0},
                                     {make_family_curve(1.0, 0.5), 0.3},
                                     {make_ellipse(2.0, 1.0), 1.0}};
    std::mt19937 rng(7);
    for (const auto& c : cases) {
        const LocalChart chart = local_chart(c.curve, c.curve->point_at(c.param));
        std::uniform_real_distribution<double> dist(0.5 * chart.u_range().lo,
                                                    0.5 * chart.u_range().hi);
        for (int i = 0; i < 20; ++i) {
            const double u = dist(rng);
            const Vec2 world = chart.to_world(u, chart.value(u));
            const Vec2 on_curve = c.curve->position(chart.param_at(u));
            CHECK(distance(world, on_curve) <= 1e-10);
        }
    }
}

TEST_CASE("chart second derivative at zero equals the curvature") {
    struct Case {
        CurvePtr curve;
        double param;
    };
    const std::vector<Case> cases = {{make_quadratic(1.0, 0.0, 0.0), 1.0},
                                     {make_ellipse(1.0, 1.0), 1.5 * kPi},
                                     {make_ellipse(2.0, 1.0), 0.7},
                                     {make_family_curve(1.0, 0.5), 0.2}};
    for (const auto& c : cases) {
        const LocalChart chart = local_chart(c.curve, c.curve->point_at(c.param));
        const double kappa = curvature_analytic(*c.curve, c.param);
        CHECK(std::fabs(chart.second_derivative_at_zero() - kappa) <= 1e-8);
    }
}

TEST_CASE("chart construction rejects points at the domain boundary") {
    const auto q = make_quadratic(1.0, 0.0, 0.0, {-2.0, 2.0});
    CHECK_THROWS_AS(local_chart(q, q->point_at(2.0 - 1e-9)), std::domain_error);
}

TEST_CASE("strict convexity check") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    const auto rq = check_strict_convexity(*q, 50);
    CHECK(rq.strictly_convex);
    // minimum curvature 2/W^3 sits at the widest sampled |x|
    const double m = q->edge_margin();
    const double x_edge = 8.0 - m;
    const double w = std::sqrt(1.0 + 4.0 * x_edge * x_edge);
    CHECK(rq.min_curvature == doctest::Approx(2.0 / (w * w * w)).epsilon(1e-9));

    const auto cubic = make_custom_poly({0.0, 0.0, 0.0, 1.0}, {-1.0, 1.0});
    const auto rc = check_strict_convexity(*cubic, 51);
    CHECK_FALSE(rc.strictly_convex);
    CHECK(cubic->curvature(-0.5) < 0.0);

    const auto e10 = check_strict_convexity(*make_example10(), 101);
    CHECK(e10.strictly_convex);  // one-sided second derivatives positive
    CHECK_FALSE(e10.c3);

    CHECK_THROWS_AS(check_strict_convexity(*q, 2), std::invalid_argument);
}

TEST_CASE("curvature_analytic rejects points off the curve") {
    const auto q = make_quadratic(1.0, 0.0, 0.0);
    CurvePoint p = q->point_at(1.0);
    p.location.y += 0.5;
    CHECK_THROWS_AS(curvature_analytic(*q, p), std::invalid_argument);
}

TEST_CASE("closed parametric curves wrap their parameter") {
    const auto e = make_ellipse(2.0, 1.0);
    CHECK(distance(e->position(0.3), e->position(0.3 + 2.0 * kPi)) < 1e-12);
    CHECK(distance(e->position(-1.0), e->position(-1.0 + 2.0 * kPi)) < 1e-12);
}

TEST_CASE("closed parametric loops must close") {
    CHECK_THROWS_AS(ParametricCurve({0.0, 1.0}, [](double t) { return Vec2{t, t * t}; },
                                    nullptr, nullptr, /*closed=*/true),
                    std::invalid_argument);
}
