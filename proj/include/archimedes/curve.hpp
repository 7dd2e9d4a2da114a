#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "archimedes/geometry.hpp"

namespace archimedes {

// Point on a curve with its frame. The normal is the unit normal pointing to
// the convex side (left of the velocity for positively oriented curves,
// upward for graphs).
struct CurvePoint {
    Vec2 location;
    Vec2 tangent;
    Vec2 normal;
    double param = 0.0;
};

class GraphCurve;

// Strictly convex plane curve, evaluable by parameter. Graphs use the
// abscissa as parameter. Immutable after construction; all evaluation is
// const and safe to share across threads.
class Curve {
public:
    virtual ~Curve() = default;

    const std::string& label() const { return label_; }
    const Interval& param_domain() const { return domain_; }
    bool closed() const { return closed_; }
    double period() const { return domain_.width(); }
    // False for counterexample curves (kept representable, flagged so
    // condition reports can carry a hypothesis violation).
    bool c3() const { return c3_; }

    virtual Vec2 position(double t) const = 0;
    virtual Vec2 velocity(double t) const = 0;
    virtual Vec2 acceleration(double t) const = 0;

    CurvePoint point_at(double t) const;
    // Signed curvature with respect to the convex-side normal.
    double curvature(double t) const;

    virtual const GraphCurve* as_graph() const { return nullptr; }

    // Points this close to an open endpoint are rejected by operations that
    // need a two-sided neighborhood.
    double edge_margin() const { return closed_ ? 0.0 : 1e-6 * domain_.width(); }
    // Evaluation clamp for chord endpoints: essentially the full open domain.
    double eval_margin() const { return closed_ ? 0.0 : 1e-12 * domain_.width(); }

    void require_interior(double t) const;

protected:
    Curve(Interval domain, bool closed, std::string label, bool c3)
        : domain_(domain), closed_(closed), label_(std::move(label)), c3_(c3) {}

    double wrap(double t) const;

    Interval domain_;
    bool closed_ = false;
    std::string label_;
    bool c3_ = true;
};

using CurvePtr = std::shared_ptr<const Curve>;

// Graph of a strictly convex function f on an open interval. Analytic
// derivatives are optional; central differences fill in when absent unless
// the fallback is disabled.
class GraphCurve : public Curve {
public:
    using Fn = std::function<double(double)>;

    GraphCurve(Interval domain, Fn f, Fn df = nullptr, Fn ddf = nullptr,
               std::string label = "graph", bool c3 = true);

    double f(double x) const { return f_(x); }
    double df(double x) const;
    double ddf(double x) const;
    // W(x) = sqrt(1 + f'(x)^2)
    double slope_factor(double x) const;

    bool has_analytic_derivatives() const { return bool(df_) && bool(ddf_); }
    void set_fd_fallback(bool enabled) { fd_fallback_ = enabled; }

    Vec2 position(double t) const override { return {t, f_(t)}; }
    Vec2 velocity(double t) const override { return {1.0, df(t)}; }
    Vec2 acceleration(double t) const override { return {0.0, ddf(t)}; }
    const GraphCurve* as_graph() const override { return this; }

private:
    Fn f_, df_, ddf_;
    bool fd_fallback_ = true;
};

class ParametricCurve : public Curve {
public:
    using Fn2 = std::function<Vec2(double)>;

    ParametricCurve(Interval domain, Fn2 position, Fn2 velocity = nullptr,
                    Fn2 acceleration = nullptr, bool closed = false,
                    std::string label = "parametric", bool c3 = true);

    Vec2 position(double t) const override;
    Vec2 velocity(double t) const override;
    Vec2 acceleration(double t) const override;

private:
    Fn2 pos_, vel_, acc_;
};

// ---- built-in families ----

// f(x) = a x^2 + b x + c, a > 0.
std::shared_ptr<const GraphCurve> make_quadratic(double a, double b, double c,
                                                 Interval domain = {-8.0, 8.0});

// f(x) = b {(1 - c x) - sqrt(1 - 2 c x)}, b > 0, c != 0. An open parabola arc
// with f(0) = f'(0) = 0 and f''(0) = b c^2; the stored domain ends at the
// sqrt boundary x = 1/(2c) and has width 4/|c|.
std::shared_ptr<const GraphCurve> make_family_curve(double b, double c);

// Piecewise 9x^2 / (9/4)x^2 counterexample; C^1 but not C^3 at the origin,
// flagged via c3() == false.
std::shared_ptr<const GraphCurve> make_example10();

// (a cos t, b sin t), t in [0, 2pi], positively oriented.
std::shared_ptr<const ParametricCurve> make_ellipse(double a, double b);

// Vertical translate y = f(x) + k of a graph curve, k > 0.
std::shared_ptr<const GraphCurve> make_offset_graph(
    const std::shared_ptr<const GraphCurve>& base, double k);

// Polynomial with ascending coefficients; convexity is not enforced here
// (check_strict_convexity reports on it).
std::shared_ptr<const GraphCurve> make_custom_poly(std::vector<double> coeffs,
                                                   Interval domain);

// Image of a curve under an orientation-preserving affine map.
std::shared_ptr<const ParametricCurve> make_transformed(CurvePtr base, const AffineMap& map);

// ---- operations ----

double curvature_analytic(const Curve& curve, double t);
double curvature_analytic(const Curve& curve, const CurvePoint& point);

struct ConvexityReport {
    bool strictly_convex = false;
    double min_curvature = 0.0;
    double argmin = 0.0;
    bool c3 = true;
};

ConvexityReport check_strict_convexity(const Curve& curve, int n_samples);

// Tangent-aligned chart at a point: the curve is locally the graph of
// v(u) with v(0) = 0, v'(0) = 0, v''(0) = curvature.
class LocalChart {
public:
    LocalChart(CurvePtr curve, CurvePoint origin);

    const CurvePoint& origin() const { return origin_; }
    double rotation_angle() const;
    const Interval& u_range() const { return u_range_; }

    double value(double u) const;          // v(u)
    double second_derivative_at_zero() const;
    Vec2 to_world(double u, double v) const;
    // parameter of the curve point at chart abscissa u
    double param_at(double u) const;

private:
    double chart_u(double t) const;

    CurvePtr curve_;
    CurvePoint origin_;
    Interval u_range_{0.0, 0.0};
    Interval t_range_{0.0, 0.0};
};

LocalChart local_chart(CurvePtr curve, const CurvePoint& point);

}  // namespace archimedes
