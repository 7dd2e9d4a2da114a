#pragma once

#include <functional>
#include <vector>

namespace archimedes::num {

using Fn = std::function<double(double)>;

struct RootOptions {
    double f_tol = 0.0;        // accept when |f| <= f_tol (0 = ignore)
    double x_rel_tol = 4e-16;  // bracket width tolerance, relative to max(1,|x|)
    int max_iter = 200;
};

// Safeguarded Brent root on a sign-changing bracket [a, b].
// fa, fb are f(a), f(b); throws std::invalid_argument if they do not bracket.
double brent_root(const Fn& f, double a, double b, double fa, double fb,
                  const RootOptions& opts = {});
double brent_root(const Fn& f, double a, double b, const RootOptions& opts = {});

struct MaxResult {
    double arg = 0.0;
    double value = 0.0;
};

// Maximum of a continuous function on [a, b]: coarse scan followed by
// golden-section refinement around the best cell. Exact enough for the
// unimodal side profiles this library feeds it.
MaxResult scan_max(const Fn& f, double a, double b, int n_scan = 96,
                   double x_rel_tol = 1e-12);

// Adaptive Simpson with absolute tolerance and depth cap; throws
// std::runtime_error when the tolerance cannot be certified.
double adaptive_simpson(const Fn& f, double a, double b, double tol = 1e-11,
                        int max_depth = 40);

// Least squares min ||diag(w) (A x - y)||_2 via Householder QR.
// a is row-major, m rows of n columns; w may be empty (unit weights).
std::vector<double> lsq_solve(const std::vector<double>& a, int m, int n,
                              const std::vector<double>& y,
                              const std::vector<double>& w = {});

// Fit y = a * x^b through least squares on (log x, log y).
struct PowerFit {
    double coeff = 0.0;     // a
    double exponent = 0.0;  // b
    double residual_norm = 0.0;  // ||log y - fit||_2
};
PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

// Central finite differences with the truncation/rounding-balanced steps
// eps^(1/2) and eps^(1/3), scaled by max(1,|x|). Steps shrink to keep
// x +/- step inside (lo, hi) when bounds are supplied.
double fd_derivative(const Fn& f, double x, double lo, double hi);
double fd_second_derivative(const Fn& f, double x, double lo, double hi);

}  // namespace archimedes::num
