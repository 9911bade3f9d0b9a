#include "doctest.h"

#include <Eigen/Dense>

#include "hypoheat/algebra/matrix_fns.hpp"
#include "hypoheat/algebra/octonion.hpp"
#include "hypoheat/algebra/quaternion.hpp"
#include "hypoheat/sde/rng.hpp"

using namespace hypoheat;

TEST_CASE("quaternion hamilton relations") {
    const alg::Quaternion I{0, 1, 0, 0}, J{0, 0, 1, 0}, K{0, 0, 0, 1};
    auto m1 = alg::Quaternion{-1, 0, 0, 0};
    CHECK((I * I).w == doctest::Approx(-1.0));
    CHECK((J * J).w == doctest::Approx(-1.0));
    CHECK((K * K).w == doctest::Approx(-1.0));
    const auto ijk = I * J * K;
    CHECK(ijk.w == doctest::Approx(m1.w));
    CHECK(std::abs(ijk.x) + std::abs(ijk.y) + std::abs(ijk.z) < 1e-15);
}

TEST_CASE("epsilon table is the seven positive triples, antisymmetric") {
    const auto& tab = alg::epsilon_table();
    const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                               {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    for (auto& t : triples) {
        CHECK(tab.eps(t[0], t[1], t[2]) == 1);
        CHECK(tab.eps(t[1], t[0], t[2]) == -1);
    }
    int positive = 0;
    for (int m = 1; m < 8; ++m)
        for (int j = 1; j < 8; ++j)
            for (int k = 1; k < 8; ++k)
                if (m < j && tab.eps(m, j, k) == 1) ++positive;
    CHECK(positive == 7);
}

TEST_CASE("octonion unit element and quaternion embedding") {
    sde::Rng rng(11, 0);
    std::array<double, 8> c;
    for (auto& v : c) v = rng.normal();
    alg::Octonion x(c);
    auto e0 = alg::Octonion::unit(0);
    CHECK((e0 * x - x).norm() < 1e-15);
    // e1 e2 = e3 under the structure-tensor convention (the e0..e3 subalgebra
    // is quaternionic)
    auto p = alg::Octonion::unit(1) * alg::Octonion::unit(2);
    CHECK(p.c[3] == doctest::Approx(1.0));
    alg::Quaternion q1{0.3, -1.2, 0.5, 2.0}, q2{1.1, 0.4, -0.7, 0.2};
    auto qo = alg::Octonion::from_quaternion(q1) * alg::Octonion::from_quaternion(q2);
    auto qq = q1 * q2;
    CHECK(qo.c[0] == doctest::Approx(qq.w));
    CHECK(qo.c[1] == doctest::Approx(qq.x));
    CHECK(qo.c[2] == doctest::Approx(qq.y));
    CHECK(qo.c[3] == doctest::Approx(qq.z));
    for (int j = 4; j < 8; ++j) CHECK(std::abs(qo.c[j]) < 1e-15);
}

TEST_CASE("norm multiplicativity and alternativity on random pairs") {
    sde::Rng rng(42, 0);
    double worst_mult_q = 0, worst_mult_o = 0, worst_alt = 0;
    for (int it = 0; it < 10000; ++it) {
        alg::Quaternion a{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        alg::Quaternion b{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        worst_mult_q = std::max(worst_mult_q,
                                std::abs((a * b).norm() - a.norm() * b.norm()) /
                                    (a.norm() * b.norm()));
        std::array<double, 8> ca, cb;
        for (auto& v : ca) v = rng.normal();
        for (auto& v : cb) v = rng.normal();
        alg::Octonion x(ca), y(cb);
        worst_mult_o = std::max(worst_mult_o, std::abs((x * y).norm() - x.norm() * y.norm()) /
                                                  (x.norm() * y.norm()));
        // (x x) y = x (x y)
        auto lhs = (x * x) * y, rhs = x * (x * y);
        worst_alt = std::max(worst_alt, (lhs - rhs).norm() / lhs.norm());
        // conj(x) x = |x|^2 e0
        auto n2 = x.conj() * x;
        CHECK(n2.c[0] == doctest::Approx(x.norm_sq()));
    }
    CHECK(worst_mult_q < 1e-13);
    CHECK(worst_mult_o < 1e-13);
    CHECK(worst_alt < 1e-12);
}

TEST_CASE("matrix exp") {
    using alg::CMatrix;
    CHECK((alg::matrix_exp(CMatrix::Zero(3, 3)) - CMatrix::Identity(3, 3)).norm() < 1e-15);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = d(1, 1) = alg::Complex(0, M_PI);
    CHECK((alg::matrix_exp(d) + CMatrix::Identity(2, 2)).norm() < 1e-13);
    // 2x2 closed form: exp(t P) = cos t I + sin t P for P = [[i,0],[0,-i]]
    CMatrix pauli = CMatrix::Zero(2, 2);
    pauli(0, 0) = alg::Complex(0, 1);
    pauli(1, 1) = alg::Complex(0, -1);
    const double t = 0.3;
    CMatrix ref = std::cos(t) * CMatrix::Identity(2, 2) + std::sin(t) * pauli;
    CHECK((alg::matrix_exp(t * pauli) - ref).norm() < 1e-14);
    // series oracle on a random skew-Hermitian matrix
    sde::Rng rng(3, 0);
    CMatrix a = CMatrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = alg::Complex(rng.normal(), rng.normal());
    a = 0.5 * (a - a.adjoint()).eval();
    CMatrix series = CMatrix::Identity(3, 3), term = CMatrix::Identity(3, 3);
    for (int m = 1; m < 60; ++m) {
        term = (term * a / m).eval();
        series += term;
    }
    CHECK((alg::matrix_exp(a) - series).norm() < 1e-14);
    CHECK((alg::matrix_exp(a) * alg::matrix_exp((-a).eval()) - CMatrix::Identity(3, 3))
              .norm() < 1e-11);
    CHECK(alg::unitary_defect(alg::matrix_exp(a)) < 1e-12);
}

TEST_CASE("hermitian sqrt and polar retraction") {
    using alg::CMatrix;
    CHECK((alg::hermitian_sqrt(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)).norm() <
          1e-14);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    auto s = alg::hermitian_sqrt(d);
    CHECK(s(0, 0).real() == doctest::Approx(2.0));
    CHECK(s(1, 1).real() == doctest::Approx(3.0));
    sde::Rng rng(5, 0);
    CMatrix b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = alg::Complex(rng.normal(), rng.normal());
    CMatrix a = b * b.adjoint();
    auto sa = alg::hermitian_sqrt(a);
    CHECK((sa * sa - a).norm() < 1e-10 * a.norm());
    CHECK(alg::skew_hermitian_defect(alg::Complex(0, 1) * sa) < 1e-12 * sa.norm());
    CHECK_THROWS(alg::hermitian_sqrt((-1.0 * CMatrix::Identity(2, 2)).eval()));

    // polar retraction
    CMatrix u = alg::matrix_exp((0.5 * (b - b.adjoint())).eval());
    CHECK((alg::polar_retract(u) - u).norm() < 1e-13);
    CHECK((alg::polar_retract((2.0 * CMatrix::Identity(3, 3)).eval()) -
           CMatrix::Identity(3, 3))
              .norm() < 1e-13);
    CMatrix pert = u + 1e-3 * b;
    auto up = alg::polar_retract(pert);
    CHECK(alg::unitary_defect(up) < 1e-10);
    CHECK((up - u).norm() < 5e-3);
}

TEST_CASE("det arg tracking") {
    using alg::CMatrix;
    // constant path at I
    std::vector<CMatrix> path(10, CMatrix::Identity(2, 2));
    auto out = alg::det_arg_track(path);
    for (const auto& pt : out) {
        CHECK(pt.modulus == doctest::Approx(1.0));
        CHECK(pt.argument == doctest::Approx(0.0));
    }
    // scalar winding 0 -> 4 pi
    path.clear();
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
        CMatrix m = CMatrix::Identity(2, 2);
        m(0, 0) = std::exp(alg::Complex(0, 4.0 * M_PI * i / n));
        path.push_back(m);
    }
    out = alg::det_arg_track(path);
    CHECK(out.back().argument == doctest::Approx(4.0 * M_PI));
}
