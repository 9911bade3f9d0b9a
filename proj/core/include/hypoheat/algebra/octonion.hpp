#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "hypoheat/algebra/quaternion.hpp"

namespace hypoheat::alg {

/// Signed structure tensor of the octonions: the seven positive triples
/// (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5), completely
/// antisymmetrized. e_m e_j = -delta_mj e_0 + sum_k eps_{mjk} e_k.
struct EpsilonTable {
    // eps[m][j] = k index (1..7) with sign, 0 when m==j.
    std::array<std::array<int8_t, 8>, 8> target{};   // |value| = k
    std::array<std::array<int8_t, 8>, 8> sign{};

    constexpr EpsilonTable() {
        constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                       {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
        for (int t = 0; t < 7; ++t) {
            const int a = triples[t][0], b = triples[t][1], c = triples[t][2];
            // even permutations get +, odd get -
            const int p[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
            for (int q = 0; q < 3; ++q) {
                const int i = p[q][0], j = p[q][1], k = p[q][2];
                target[i][j] = static_cast<int8_t>(k);
                sign[i][j] = 1;
                target[j][i] = static_cast<int8_t>(k);
                sign[j][i] = -1;
            }
        }
    }

    // eps_{mjk} as a scalar, for table audits.
    constexpr int eps(int m, int j, int k) const {
        if (m == j || target[m][j] != k) return 0;
        return sign[m][j];
    }
};

inline const EpsilonTable& epsilon_table() {
    static constexpr EpsilonTable tab{};
    return tab;
}

/// Octonion x = sum_{j=0..7} c[j] e_j, product from the signed triple table.
struct Octonion {
    std::array<double, 8> c{};

    constexpr Octonion() = default;
    explicit constexpr Octonion(const std::array<double, 8>& a) : c(a) {}

    static Octonion unit(int j, double v = 1.0) {
        Octonion o;
        o.c[static_cast<size_t>(j)] = v;
        return o;
    }

    /// Quaternions embed as the e0..e3 subalgebra.
    static constexpr Octonion from_quaternion(const Quaternion& q) {
        Octonion o;
        o.c = {q.w, q.x, q.y, q.z, 0, 0, 0, 0};
        return o;
    }

    Octonion conj() const {
        Octonion o = *this;
        for (int j = 1; j < 8; ++j) o.c[j] = -o.c[j];
        return o;
    }

    double norm_sq() const {
        double s = 0;
        for (double v : c) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int j = 0; j < 8; ++j) r.c[j] = c[j] + o.c[j];
        return r;
    }
    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int j = 0; j < 8; ++j) r.c[j] = c[j] - o.c[j];
        return r;
    }
    Octonion operator*(double s) const {
        Octonion r;
        for (int j = 0; j < 8; ++j) r.c[j] = c[j] * s;
        return r;
    }

    Octonion operator*(const Octonion& o) const {
        const auto& tab = epsilon_table();
        Octonion r;
        // e0 acts as the unit
        for (int j = 0; j < 8; ++j) {
            r.c[j] += c[0] * o.c[j];
            if (j > 0) r.c[j] += c[j] * o.c[0];
        }
        for (int m = 1; m < 8; ++m) {
            if (c[m] == 0.0) continue;
            for (int j = 1; j < 8; ++j) {
                if (o.c[j] == 0.0) continue;
                const double prod = c[m] * o.c[j];
                if (m == j) {
                    r.c[0] -= prod;
                } else {
                    r.c[tab.target[m][j]] += tab.sign[m][j] * prod;
                }
            }
        }
        return r;
    }

    /// Components along e1..e7.
    std::array<double, 7> im() const { return {c[1], c[2], c[3], c[4], c[5], c[6], c[7]}; }
};

inline Octonion operator*(double s, const Octonion& o) { return o * s; }

} // namespace hypoheat::alg
