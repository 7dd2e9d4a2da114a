#pragma once

#include <cmath>

namespace archimedes {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
    // counterclockwise quarter turn
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Open interval (lo, hi); also used as the parameter range of closed loops.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double t, double margin = 0.0) const {
        return t > lo + margin && t < hi - margin;
    }
    double clamp(double t, double margin) const {
        if (t < lo + margin) return lo + margin;
        if (t > hi - margin) return hi - margin;
        return t;
    }
};

// y = L x + t with L = [[a, b], [c, d]].
struct AffineMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    Vec2 t{0.0, 0.0};

    Vec2 apply(const Vec2& p) const { return {a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y}; }
    Vec2 linear(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    double det() const { return a * d - b * c; }

    static AffineMap rigid(double angle, const Vec2& shift) {
        AffineMap m;
        m.a = std::cos(angle);
        m.b = -std::sin(angle);
        m.c = std::sin(angle);
        m.d = std::cos(angle);
        m.t = shift;
        return m;
    }
};

}  // namespace archimedes
