#pragma once

#include <cmath>

namespace hypoheat::sfn {

/// Second-order jet (value, first and second derivative w.r.t. one variable):
/// exact derivatives of composite integrands without finite differences.
struct Jet2 {
    double v = 0.0, d1 = 0.0, d2 = 0.0;

    static Jet2 variable(double x) { return {x, 1.0, 0.0}; }
    static Jet2 constant(double c) { return {c, 0.0, 0.0}; }

    Jet2 operator+(const Jet2& o) const { return {v + o.v, d1 + o.d1, d2 + o.d2}; }
    Jet2 operator-(const Jet2& o) const { return {v - o.v, d1 - o.d1, d2 - o.d2}; }
    Jet2 operator*(const Jet2& o) const {
        return {v * o.v, d1 * o.v + v * o.d1, d2 * o.v + 2.0 * d1 * o.d1 + v * o.d2};
    }
    Jet2 operator/(const Jet2& o) const {
        const double w = v / o.v;
        const double w1 = (d1 - w * o.d1) / o.v;
        const double w2 = (d2 - 2.0 * w1 * o.d1 - w * o.d2) / o.v;
        return {w, w1, w2};
    }
    Jet2 operator*(double c) const { return {v * c, d1 * c, d2 * c}; }
};

inline Jet2 sin(const Jet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return {s, c * x.d1, c * x.d2 - s * x.d1 * x.d1};
}
inline Jet2 cos(const Jet2& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return {c, -s * x.d1, -s * x.d2 - c * x.d1 * x.d1};
}
inline Jet2 exp(const Jet2& x) {
    const double e = std::exp(x.v);
    return {e, e * x.d1, e * (x.d2 + x.d1 * x.d1)};
}

} // namespace hypoheat::sfn
