#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hypoheat::alg {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Certificates for the refined wrappers. Each returns the defect that the
// corresponding tolerance in the contracts bounds.

inline double unitary_defect(const CMatrix& U) {
    return (U.adjoint() * U - CMatrix::Identity(U.cols(), U.cols())).norm();
}

inline double skew_hermitian_defect(const CMatrix& A) {
    return (A + A.adjoint()).norm();
}

/// Defect of the pseudo-unitarity relation U* eta U = eta, eta = diag(I_{n-k}, -I_k).
inline double pseudo_unitary_defect(const CMatrix& U, const RVector& eta_diag) {
    CMatrix e = eta_diag.cast<Complex>().asDiagonal();
    return (U.adjoint() * e * U - e).norm();
}

inline double min_eigenvalue_hermitian(const CMatrix& A) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (A + A.adjoint()),
                                              Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace hypoheat::alg
