#include "archimedes/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace archimedes::num {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

double brent_root(const Fn& f, double a, double b, double fa, double fb,
                  const RootOptions& opts) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("brent_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * opts.x_rel_tol * std::max(1.0, std::fabs(b));
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0 ||
            (opts.f_tol > 0.0 && std::fabs(fb) <= opts.f_tol))
            return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (fb == 0.0) return b;
    }
    throw std::runtime_error("brent_root: no convergence within iteration budget");
}

double brent_root(const Fn& f, double a, double b, const RootOptions& opts) {
    return brent_root(f, a, b, f(a), f(b), opts);
}

MaxResult scan_max(const Fn& f, double a, double b, int n_scan, double x_rel_tol) {
    if (!(b > a)) return {a, f(a)};
    n_scan = std::max(n_scan, 4);
    double best_t = a, best_v = -std::numeric_limits<double>::infinity();
    std::vector<double> ts(n_scan + 1);
    for (int i = 0; i <= n_scan; ++i) {
        const double t = a + (b - a) * i / n_scan;
        ts[i] = t;
        const double v = f(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    // golden refinement in the two cells flanking the best sample
    int idx = int((best_t - a) / (b - a) * n_scan + 0.5);
    double lo = ts[std::max(0, idx - 1)];
    double hi = ts[std::min(n_scan, idx + 1)];
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > x_rel_tol * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm > best_v) {
        best_v = fm;
        best_t = mid;
    }
    return {best_t, best_v};
}

namespace {

double simpson_step(const Fn& f, double a, double m, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth, int max_depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= 3 && std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth >= max_depth) {
        if (std::fabs(delta) > 15.0 * std::max(tol, 1e-7))
            throw std::runtime_error("adaptive_simpson: tolerance not met at depth cap");
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const Fn& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, m, b, fa, fm, fb, whole, tol, 0, max_depth);
}

std::vector<double> lsq_solve(const std::vector<double>& a, int m, int n,
                              const std::vector<double>& y, const std::vector<double>& w) {
    if (m < n) throw std::invalid_argument("lsq_solve: underdetermined system");
    std::vector<double> r(a);
    std::vector<double> rhs(y);
    if (!w.empty()) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) r[i * n + j] *= w[i];
            rhs[i] *= w[i];
        }
    }
    // column equilibration keeps the QR well scaled for steep weights
    std::vector<double> col_scale(n, 1.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s = std::max(s, std::fabs(r[i * n + j]));
        if (s > 0.0) {
            col_scale[j] = s;
            for (int i = 0; i < m; ++i) r[i * n + j] /= s;
        }
    }
    // Householder QR
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i) norm = std::hypot(norm, r[i * n + k]);
        if (norm == 0.0) throw std::runtime_error("lsq_solve: rank-deficient design matrix");
        if (r[k * n + k] > 0.0) norm = -norm;
        for (int i = k; i < m; ++i) r[i * n + k] /= norm;
        r[k * n + k] += 1.0;
        for (int j = k + 1; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < m; ++i) s += r[i * n + k] * r[i * n + j];
            s = -s / r[k * n + k];
            for (int i = k; i < m; ++i) r[i * n + j] += s * r[i * n + k];
        }
        double s = 0.0;
        for (int i = k; i < m; ++i) s += r[i * n + k] * rhs[i];
        s = -s / r[k * n + k];
        for (int i = k; i < m; ++i) rhs[i] += s * r[i * n + k];
        r[k * n + k] = -norm;
    }
    std::vector<double> x(n, 0.0);
    for (int k = n - 1; k >= 0; --k) {
        double s = rhs[k];
        for (int j = k + 1; j < n; ++j) s -= r[k * n + j] * x[j];
        x[k] = s / r[k * n + k];
    }
    for (int j = 0; j < n; ++j) x[j] /= col_scale[j];
    return x;
}

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_power_law: need at least two samples");
    const int m = int(x.size());
    std::vector<double> a(2 * m);
    std::vector<double> ly(m);
    for (int i = 0; i < m; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit_power_law: samples must be positive");
        a[2 * i] = 1.0;
        a[2 * i + 1] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    const auto c = lsq_solve(a, m, 2, ly);
    double rss = 0.0;
    for (int i = 0; i < m; ++i) {
        const double e = ly[i] - (c[0] + c[1] * a[2 * i + 1]);
        rss += e * e;
    }
    return {std::exp(c[0]), c[1], std::sqrt(rss)};
}

double fd_derivative(const Fn& f, double x, double lo, double hi) {
    double step = std::sqrt(kEps) * std::max(1.0, std::fabs(x));
    if (lo < hi) {
        const double room = std::min(x - lo, hi - x);
        if (room <= 0.0) throw std::domain_error("fd_derivative: point outside domain");
        step = std::min(step, 0.5 * room);
    }
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

double fd_second_derivative(const Fn& f, double x, double lo, double hi) {
    double step = std::cbrt(kEps) * std::max(1.0, std::fabs(x));
    if (lo < hi) {
        const double room = std::min(x - lo, hi - x);
        if (room <= 0.0) throw std::domain_error("fd_second_derivative: point outside domain");
        step = std::min(step, 0.5 * room);
    }
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
}

}  // namespace archimedes::num
