#pragma once

#include <vector>

#include "hypoheat/algebra/cmatrix.hpp"
#include "hypoheat/sde/rng.hpp"

namespace hypoheat::sde {

/// Inner-product normalization of the u(n) basis. HalfTrace is the monograph's
/// Killing form -(1/2)tr(AB) (diagonal quadratic variation 2dt per entry);
/// Trace is -tr(AB), running the torus eigenvalues at variance t. Closed-form
/// eigenvalue densities and convergence rates differ by this factor of two,
/// so every consumer states its convention explicitly.
enum class UnConvention { HalfTrace, Trace };

/// Basis of u(n) scaled so that sum_i xi_i X_i with xi ~ N(0, dt) is the
/// Brownian increment for the chosen convention.
std::vector<alg::CMatrix> un_basis(int n, UnConvention conv);

/// Basis of u(n-k,k) for the inner product -(1/2) tr(I_{n-k,k} A I_{n-k,k} B)
/// (the indefinite analogue of HalfTrace).
std::vector<alg::CMatrix> unkk_basis(int n, int k);

/// Draws dA = sum_i (sqrt(dt) N_i) X_i.
alg::CMatrix lie_increment(const std::vector<alg::CMatrix>& basis, double dt, Rng& rng);

/// Left-invariant group integrator state: U <- U exp(dA), with a polar (or
/// indefinite-polar) retraction applied every `retract_every` steps to cancel
/// accumulated drift-off.
class GroupPath {
public:
    GroupPath(alg::CMatrix u0, int retract_every = 64);
    /// eta_diag empty => unitary group; otherwise pseudo-unitary with that form.
    void set_pseudo(const alg::RVector& eta_diag) { eta_ = eta_diag; }

    void step(const alg::CMatrix& dA);
    const alg::CMatrix& value() const { return u_; }

private:
    alg::CMatrix u_;
    alg::RVector eta_;
    int retract_every_;
    int since_retract_ = 0;
};

} // namespace hypoheat::sde
