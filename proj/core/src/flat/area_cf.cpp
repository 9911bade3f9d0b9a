#include "hypoheat/flat/area_cf.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hypoheat::flat {

namespace {

// log(z/sinh z), stable near 0
double log_z_over_sinh(double z) {
    if (std::abs(z) < 1e-6) return -z * z / 6.0;
    return std::log(z) - std::log(std::sinh(z));
}

// z coth z - 1, stable near 0
double zcoth_m1(double z) {
    if (std::abs(z) < 1e-6) return z * z / 3.0;
    return z / std::tanh(z) - 1.0;
}

} // namespace

double flat_area_cf(const FlatModel& model, std::span<const double> lambda, double t,
                    std::span<const double> x) {
    if (model.kind == FlatModel::Kind::SkewQuadratic) {
        if (lambda.size() != 1)
            throw std::invalid_argument("flat_area_cf: scalar lambda for skew model");
        alg::RMatrix A = lambda[0] * model.skew;
        return general_skew_cf(A, t, x);
    }
    if (static_cast<int>(lambda.size()) != model.area_dim())
        throw std::invalid_argument("flat_area_cf: lambda dimension mismatch");
    double ln = 0.0;
    for (double l : lambda) ln += l * l;
    ln = std::sqrt(ln);
    const int p = model.cf_power();
    if (x.empty()) return std::exp(-p * std::log(std::cosh(ln * t)));
    double xn2 = 0.0;
    for (double v : x) xn2 += v * v;
    return std::exp(p * log_z_over_sinh(ln * t) - xn2 / (2.0 * t) * zcoth_m1(ln * t));
}

std::vector<double> skew_angles(const alg::RMatrix& A) {
    Eigen::RealSchur<alg::RMatrix> schur(A);
    const alg::RMatrix& T = schur.matrixT();
    std::vector<double> out;
    for (int i = 0; i < T.rows();) {
        if (i + 1 < T.rows() && std::abs(T(i + 1, i)) > 1e-12) {
            out.push_back(std::abs(T(i, i + 1)));
            i += 2;
        } else {
            out.push_back(0.0); // zero eigenvalue block
            i += 1;
        }
    }
    return out;
}

double general_skew_cf(const alg::RMatrix& A, double t, std::span<const double> x) {
    if ((A + A.transpose()).norm() > 1e-12 * (1.0 + A.norm()))
        throw std::invalid_argument("general_skew_cf: non-skew input");
    Eigen::RealSchur<alg::RMatrix> schur(A);
    const alg::RMatrix& T = schur.matrixT();
    const alg::RMatrix& Q = schur.matrixU();
    alg::RVector xr;
    if (!x.empty()) {
        alg::RVector xv = Eigen::Map<const alg::RVector>(x.data(), x.size());
        xr = Q.transpose() * xv;
    }
    double logcf = 0.0;
    for (int i = 0; i < T.rows();) {
        if (i + 1 < T.rows() && std::abs(T(i + 1, i)) > 1e-12) {
            const double lam = std::abs(T(i, i + 1));
            logcf += log_z_over_sinh(lam * t);
            if (!x.empty()) {
                const double pair2 = xr[i] * xr[i] + xr[i + 1] * xr[i + 1];
                logcf -= pair2 / (2.0 * t) * zcoth_m1(lam * t);
            }
            i += 2;
        } else {
            i += 1; // lambda = 0 block: factor 1
        }
    }
    return std::exp(logcf);
}

} // namespace hypoheat::flat
