#include "archimedes/curve.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "archimedes/numerics.hpp"

namespace archimedes {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt_params(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}
}  // namespace

CurvePoint Curve::point_at(double t) const {
    CurvePoint p;
    p.param = t;
    p.location = position(t);
    p.tangent = velocity(t).normalized();
    p.normal = p.tangent.perp();
    return p;
}

double Curve::curvature(double t) const {
    const Vec2 v = velocity(t);
    const Vec2 a = acceleration(t);
    const double speed = v.norm();
    return v.cross(a) / (speed * speed * speed);
}

double Curve::wrap(double t) const {
    if (!closed_) return t;
    const double T = period();
    double s = std::fmod(t - domain_.lo, T);
    if (s < 0.0) s += T;
    return domain_.lo + s;
}

void Curve::require_interior(double t) const {
    if (closed_) return;
    if (!domain_.contains(t, edge_margin()))
        throw std::domain_error("point too close to an open domain endpoint of " + label_);
}

// ---- GraphCurve ----

GraphCurve::GraphCurve(Interval domain, Fn f, Fn df, Fn ddf, std::string label, bool c3)
    : Curve(domain, false, std::move(label), c3),
      f_(std::move(f)),
      df_(std::move(df)),
      ddf_(std::move(ddf)) {
    if (!(domain.width() > 0.0))
        throw std::invalid_argument("GraphCurve: empty domain");
    if (!f_) throw std::invalid_argument("GraphCurve: missing function");
}

double GraphCurve::df(double x) const {
    if (df_) return df_(x);
    if (!fd_fallback_)
        throw std::domain_error("GraphCurve: analytic derivative missing and fallback disabled");
    return num::fd_derivative(f_, x, domain_.lo, domain_.hi);
}

double GraphCurve::ddf(double x) const {
    if (ddf_) return ddf_(x);
    if (!fd_fallback_)
        throw std::domain_error("GraphCurve: analytic derivative missing and fallback disabled");
    return num::fd_second_derivative(f_, x, domain_.lo, domain_.hi);
}

double GraphCurve::slope_factor(double x) const {
    const double d = df(x);
    return std::sqrt(1.0 + d * d);
}

// ---- ParametricCurve ----

ParametricCurve::ParametricCurve(Interval domain, Fn2 position, Fn2 velocity,
                                 Fn2 acceleration, bool closed, std::string label, bool c3)
    : Curve(domain, closed, std::move(label), c3),
      pos_(std::move(position)),
      vel_(std::move(velocity)),
      acc_(std::move(acceleration)) {
    if (!(domain.width() > 0.0))
        throw std::invalid_argument("ParametricCurve: empty domain");
    if (!pos_) throw std::invalid_argument("ParametricCurve: missing position function");
    if (closed_) {
        const Vec2 a = pos_(domain_.lo);
        const Vec2 b = pos_(domain_.hi);
        if (distance(a, b) > 1e-12 * std::max(1.0, a.norm()))
            throw std::invalid_argument("ParametricCurve: closed loop endpoints do not match");
    }
}

Vec2 ParametricCurve::position(double t) const { return pos_(wrap(t)); }

Vec2 ParametricCurve::velocity(double t) const {
    const double s = wrap(t);
    if (vel_) return vel_(s);
    double step = std::sqrt(kEps) * std::max(1.0, std::fabs(s));
    if (!closed_) step = std::min(step, 0.5 * std::min(s - domain_.lo, domain_.hi - s));
    return (pos_(s + step) - pos_(s - step)) / (2.0 * step);
}

Vec2 ParametricCurve::acceleration(double t) const {
    const double s = wrap(t);
    if (acc_) return acc_(s);
    double step = std::cbrt(kEps) * std::max(1.0, std::fabs(s));
    if (!closed_) step = std::min(step, 0.5 * std::min(s - domain_.lo, domain_.hi - s));
    return (pos_(s + step) - pos_(s) * 2.0 + pos_(s - step)) / (step * step);
}

// ---- builders ----

std::shared_ptr<const GraphCurve> make_quadratic(double a, double b, double c, Interval domain) {
    if (!(a > 0.0)) throw std::invalid_argument("make_quadratic: leading coefficient must be positive");
    return std::make_shared<GraphCurve>(
        domain, [a, b, c](double x) { return (a * x + b) * x + c; },
        [a, b](double x) { return 2.0 * a * x + b; }, [a](double) { return 2.0 * a; },
        "quadratic(" + fmt_params({{"a", a}, {"b", b}, {"c", c}}) + ")");
}

std::shared_ptr<const GraphCurve> make_family_curve(double b, double c) {
    if (!(b > 0.0)) throw std::invalid_argument("make_family_curve: b must be positive");
    if (c == 0.0) throw std::invalid_argument("make_family_curve: c must be nonzero");
    const double bound = 1.0 / (2.0 * c);
    const double width = 4.0 / std::fabs(c);
    Interval domain = c > 0.0 ? Interval{bound - width, bound} : Interval{bound, bound + width};
    return std::make_shared<GraphCurve>(
        domain, [b, c](double x) { return b * ((1.0 - c * x) - std::sqrt(1.0 - 2.0 * c * x)); },
        [b, c](double x) { return b * c * (1.0 / std::sqrt(1.0 - 2.0 * c * x) - 1.0); },
        [b, c](double x) { return b * c * c * std::pow(1.0 - 2.0 * c * x, -1.5); },
        "family(" + fmt_params({{"b", b}, {"c", c}}) + ")");
}

std::shared_ptr<const GraphCurve> make_example10() {
    return std::make_shared<GraphCurve>(
        Interval{-4.0, 4.0},
        [](double x) { return x < 0.0 ? 9.0 * x * x : 2.25 * x * x; },
        [](double x) { return x < 0.0 ? 18.0 * x : 4.5 * x; },
        [](double x) { return x < 0.0 ? 18.0 : 4.5; }, "example10",
        /*c3=*/false);
}

std::shared_ptr<const ParametricCurve> make_ellipse(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("make_ellipse: axes must be positive");
    const double two_pi = 2.0 * std::acos(-1.0);
    return std::make_shared<ParametricCurve>(
        Interval{0.0, two_pi}, [a, b](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; },
        [a, b](double t) { return Vec2{-a * std::sin(t), b * std::cos(t)}; },
        [a, b](double t) { return Vec2{-a * std::cos(t), -b * std::sin(t)}; },
        /*closed=*/true, "ellipse(" + fmt_params({{"a", a}, {"b", b}}) + ")");
}

std::shared_ptr<const GraphCurve> make_offset_graph(
    const std::shared_ptr<const GraphCurve>& base, double k) {
    if (!base) throw std::invalid_argument("make_offset_graph: null base curve");
    if (!(k > 0.0)) throw std::invalid_argument("make_offset_graph: k must be positive");
    auto curve = std::make_shared<GraphCurve>(
        base->param_domain(), [base, k](double x) { return base->f(x) + k; },
        [base](double x) { return base->df(x); }, [base](double x) { return base->ddf(x); },
        base->label() + "+offset(k=" + std::to_string(k) + ")", base->c3());
    return curve;
}

std::shared_ptr<const GraphCurve> make_custom_poly(std::vector<double> coeffs, Interval domain) {
    if (coeffs.empty()) throw std::invalid_argument("make_custom_poly: empty coefficient list");
    auto horner = [](const std::vector<double>& cs, double x) {
        double v = 0.0;
        for (size_t i = cs.size(); i-- > 0;) v = v * x + cs[i];
        return v;
    };
    std::vector<double> d1(coeffs.size() > 1 ? coeffs.size() - 1 : 1, 0.0);
    for (size_t i = 1; i < coeffs.size(); ++i) d1[i - 1] = coeffs[i] * double(i);
    std::vector<double> d2(d1.size() > 1 ? d1.size() - 1 : 1, 0.0);
    for (size_t i = 1; i < d1.size(); ++i) d2[i - 1] = d1[i] * double(i);
    return std::make_shared<GraphCurve>(
        domain, [coeffs, horner](double x) { return horner(coeffs, x); },
        [d1, horner](double x) { return horner(d1, x); },
        [d2, horner](double x) { return horner(d2, x); },
        "poly(degree=" + std::to_string(coeffs.size() - 1) + ")");
}

std::shared_ptr<const ParametricCurve> make_transformed(CurvePtr base, const AffineMap& map) {
    if (!base) throw std::invalid_argument("make_transformed: null base curve");
    if (!(map.det() > 0.0))
        throw std::invalid_argument("make_transformed: map must preserve orientation");
    return std::make_shared<ParametricCurve>(
        base->param_domain(), [base, map](double t) { return map.apply(base->position(t)); },
        [base, map](double t) { return map.linear(base->velocity(t)); },
        [base, map](double t) { return map.linear(base->acceleration(t)); }, base->closed(),
        base->label() + "+affine", base->c3());
}

// ---- operations ----

double curvature_analytic(const Curve& curve, double t) { return curve.curvature(t); }

double curvature_analytic(const Curve& curve, const CurvePoint& point) {
    const Vec2 on_curve = curve.position(point.param);
    if (distance(on_curve, point.location) > 1e-9 * std::max(1.0, on_curve.norm()))
        throw std::invalid_argument("curvature_analytic: point does not lie on the curve");
    return curve.curvature(point.param);
}

ConvexityReport check_strict_convexity(const Curve& curve, int n_samples) {
    if (n_samples < 3)
        throw std::invalid_argument("check_strict_convexity: need at least 3 samples");
    ConvexityReport report;
    report.c3 = curve.c3();
    report.min_curvature = std::numeric_limits<double>::infinity();
    const Interval dom = curve.param_domain();
    const double m = curve.closed() ? 0.0 : curve.edge_margin();
    for (int i = 0; i < n_samples; ++i) {
        const double t = curve.closed()
                             ? dom.lo + dom.width() * i / n_samples
                             : dom.lo + m + (dom.width() - 2.0 * m) * i / (n_samples - 1);
        const double k = curve.curvature(t);
        if (k < report.min_curvature) {
            report.min_curvature = k;
            report.argmin = t;
        }
    }
    report.strictly_convex = report.min_curvature > 0.0;
    return report;
}

// ---- LocalChart ----

LocalChart::LocalChart(CurvePtr curve, CurvePoint origin)
    : curve_(std::move(curve)), origin_(origin) {
    curve_->require_interior(origin_.param);
    const Interval dom = curve_->param_domain();
    const double t0 = origin_.param;
    auto u_of = [this](double t) { return chart_u(t); };
    double t_plus_end, t_minus_end;
    if (curve_->closed()) {
        t_plus_end = t0 + curve_->period();
        t_minus_end = t0 - curve_->period();
    } else {
        t_plus_end = dom.hi - curve_->eval_margin();
        t_minus_end = dom.lo + curve_->eval_margin();
    }
    // chart extends to the first vertical tangent (or domain end) on each side
    const auto plus = num::scan_max(u_of, t0, t_plus_end);
    const auto minus = num::scan_max([&u_of](double t) { return -u_of(t); }, t_minus_end, t0);
    if (!(plus.value > 0.0) || !(minus.value > 0.0))
        throw std::domain_error("local_chart: degenerate chart range at " + curve_->label());
    u_range_ = {-minus.value, plus.value};
    t_range_ = {minus.arg, plus.arg};
}

double LocalChart::chart_u(double t) const {
    return (curve_->position(t) - origin_.location).dot(origin_.tangent);
}

double LocalChart::rotation_angle() const {
    return std::atan2(origin_.tangent.y, origin_.tangent.x);
}

double LocalChart::param_at(double u) const {
    if (u == 0.0) return origin_.param;
    if (!(u > u_range_.lo && u < u_range_.hi))
        throw std::domain_error("LocalChart: abscissa outside chart range");
    const double t0 = origin_.param;
    auto fn = [this, u](double t) { return chart_u(t) - u; };
    num::RootOptions opts;
    opts.f_tol = 1e-14 * std::max(1.0, std::fabs(u));
    return u > 0.0 ? num::brent_root(fn, t0, t_range_.hi, -u, chart_u(t_range_.hi) - u, opts)
                   : num::brent_root(fn, t_range_.lo, t0, chart_u(t_range_.lo) - u, -u, opts);
}

double LocalChart::value(double u) const {
    if (u == 0.0) return 0.0;
    const double t = param_at(u);
    return (curve_->position(t) - origin_.location).dot(origin_.normal);
}

Vec2 LocalChart::to_world(double u, double v) const {
    return origin_.location + u * origin_.tangent + v * origin_.normal;
}

double LocalChart::second_derivative_at_zero() const {
    const double reach = 0.5 * std::min(-u_range_.lo, u_range_.hi);
    const double r0 = 0.5 * reach;
    const double k0 = (value(r0) + value(-r0)) / (r0 * r0);
    double h = std::min(0.01 / std::max(1.0, std::fabs(k0)), 0.25 * reach);
    // five-point stencil; v(0) = 0 by construction
    const double num =
        -value(2.0 * h) + 16.0 * value(h) + 16.0 * value(-h) - value(-2.0 * h);
    return num / (12.0 * h * h);
}

LocalChart local_chart(CurvePtr curve, const CurvePoint& point) {
    return LocalChart(std::move(curve), point);
}

}  // namespace archimedes
