#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hypoheat/algebra/cmatrix.hpp"

namespace hypoheat::alg {

/// exp(A) by scaling-and-squaring with a degree-13 Pade core.
CMatrix matrix_exp(const CMatrix& A);

/// Principal square root of a Hermitian PSD matrix by eigendecomposition.
/// Eigenvalues in [-1e-10, 0) are clamped to 0; below that throws.
CMatrix hermitian_sqrt(const CMatrix& A, double clamp_tol = 1e-10);

/// Unitary polar factor U = M (M*M)^{-1/2}; throws on (numerically) singular M.
CMatrix polar_retract(const CMatrix& M);

/// Pseudo-unitary retraction onto {U : U* eta U = eta} by the Newton iteration
/// X <- (X + eta X^{-*} eta)/2 on the indefinite form eta = diag(eta_diag).
CMatrix pseudo_polar_retract(const CMatrix& M, const RVector& eta_diag,
                             int max_iter = 30, double tol = 1e-13);

struct DetTrackPoint {
    double modulus;
    double argument;   // continuously unwound
};

/// Continuous-argument lift of t -> det(path[t]). The argument increment per
/// step is taken on the principal branch; a jump >= pi signals an
/// under-resolved path.
std::vector<DetTrackPoint> det_arg_track(std::span<const CMatrix> path);

/// Incremental variant used by the simulators: state carries the running
/// unwound argument.
class DetArgTracker {
public:
    void start(const CMatrix& m);
    /// Returns false when the principal-branch increment is >= max_jump.
    bool step(const CMatrix& m, double max_jump = 3.14159265358979323846);
    double argument() const { return arg_; }
    double modulus() const { return mod_; }

private:
    double arg_ = 0.0;
    double mod_ = 1.0;
    Complex last_det_{1.0, 0.0};
    bool started_ = false;
};

} // namespace hypoheat::alg
