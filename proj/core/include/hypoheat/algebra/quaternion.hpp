#pragma once

#include <array>
#include <cmath>

namespace hypoheat::alg {

/// Quaternion q = w + xI + yJ + zK with Hamilton relations I^2=J^2=K^2=IJK=-1.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    /// Components along (I, J, K).
    constexpr std::array<double, 3> im() const { return {x, y, z}; }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

} // namespace hypoheat::alg
