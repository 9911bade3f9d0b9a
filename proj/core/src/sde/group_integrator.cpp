#include "hypoheat/sde/group_integrator.hpp"

#include <cmath>

#include "hypoheat/algebra/matrix_fns.hpp"

namespace hypoheat::sde {

using alg::CMatrix;
using alg::Complex;

std::vector<CMatrix> un_basis(int n, UnConvention conv) {
    // HalfTrace: {E_lj - E_jl, i(E_lj + E_jl), sqrt(2) i E_ll} (paper basis);
    // Trace: the same divided by sqrt(2).
    const double s = conv == UnConvention::HalfTrace ? 1.0 : 1.0 / std::sqrt(2.0);
    std::vector<CMatrix> basis;
    basis.reserve(n * n);
    for (int l = 0; l < n; ++l)
        for (int j = l + 1; j < n; ++j) {
            CMatrix a = CMatrix::Zero(n, n);
            a(l, j) = s;
            a(j, l) = -s;
            basis.push_back(a);
            CMatrix b = CMatrix::Zero(n, n);
            b(l, j) = Complex(0, s);
            b(j, l) = Complex(0, s);
            basis.push_back(b);
        }
    for (int l = 0; l < n; ++l) {
        CMatrix d = CMatrix::Zero(n, n);
        d(l, l) = Complex(0, std::sqrt(2.0) * s);
        basis.push_back(d);
    }
    return basis;
}

std::vector<CMatrix> unkk_basis(int n, int k) {
    const int m = n - k; // block sizes m, k
    std::vector<CMatrix> basis;
    basis.reserve(n * n);
    auto skew_pair = [&](int l, int j) {
        CMatrix a = CMatrix::Zero(n, n);
        a(l, j) = 1;
        a(j, l) = -1;
        basis.push_back(a);
        CMatrix b = CMatrix::Zero(n, n);
        b(l, j) = Complex(0, 1);
        b(j, l) = Complex(0, 1);
        basis.push_back(b);
    };
    auto sym_pair = [&](int l, int j) {
        CMatrix a = CMatrix::Zero(n, n);
        a(l, j) = 1;
        a(j, l) = 1;
        basis.push_back(a);
        CMatrix b = CMatrix::Zero(n, n);
        b(l, j) = Complex(0, 1);
        b(j, l) = Complex(0, -1);
        basis.push_back(b);
    };
    for (int l = 0; l < m; ++l)
        for (int j = l + 1; j < m; ++j) skew_pair(l, j);
    for (int l = m; l < n; ++l)
        for (int j = l + 1; j < n; ++j) skew_pair(l, j);
    for (int l = 0; l < m; ++l)
        for (int j = m; j < n; ++j) sym_pair(l, j);
    for (int l = 0; l < n; ++l) {
        CMatrix d = CMatrix::Zero(n, n);
        d(l, l) = Complex(0, std::sqrt(2.0));
        basis.push_back(d);
    }
    return basis;
}

CMatrix lie_increment(const std::vector<CMatrix>& basis, double dt, Rng& rng) {
    const double sd = std::sqrt(dt);
    CMatrix dA = CMatrix::Zero(basis.front().rows(), basis.front().cols());
    for (const auto& x : basis) dA += (sd * rng.normal()) * x;
    return dA;
}

GroupPath::GroupPath(CMatrix u0, int retract_every)
    : u_(std::move(u0)), retract_every_(retract_every) {}

void GroupPath::step(const CMatrix& dA) {
    u_ = u_ * alg::matrix_exp(dA);
    if (++since_retract_ >= retract_every_) {
        since_retract_ = 0;
        if (eta_.size() == 0)
            u_ = alg::polar_retract(u_);
        else
            u_ = alg::pseudo_polar_retract(u_, eta_);
    }
}

} // namespace hypoheat::sde
