#pragma once

#include <complex>
#include <functional>

#include "hypoheat/special/spectral_kernel.hpp"

namespace hypoheat::sfn {

/// Two-point heat kernel S_t(eta, u) of the radial SU(2) Laplacian
/// d^2/deta^2 + 2 cot(eta) d/deta w.r.t. the measure sin^2(u) du on [0, pi],
/// native FullGenerator convention. Sine series or theta form.
double su2_radial_kernel(double t, double eta, double u, bool theta_form = false);

/// (e^{t D} f)(eta) for D = d^2/deta^2 + 2 coth(eta) d/deta, f rapidly
/// decreasing: the sinh-kernel integral transform.
SeriesEval sl2_transform(const std::function<double(double)>& f, double t, double eta);

/// Normalized zonal eigenfunction h_m on S^7 (h_m(0) = 1), eigenvalue -m(m+6)
/// of d^2/deta^2 + 6 cot(eta) d/deta, by Gauss quadrature of the
/// (cos eta + i sin eta cos phi)^m integral.
double s7_eigenfunction(int m, double eta);

/// L2([0,pi], sin^6) norm squared of h_m.
double s7_eigenfunction_norm_sq(int m);

/// Two-point kernel s_t(eta, u) on S^7 w.r.t. sin^6(u) du (FullGenerator),
/// with eigenfunctions evaluated at complex u for analytic continuation.
std::complex<double> s7_radial_kernel(double t, double eta, std::complex<double> u,
                                      const TruncationPolicy& pol = {});

/// h_m evaluated at complex angle (continuation used by the AdS kernels).
std::complex<double> s7_eigenfunction_c(int m, std::complex<double> eta);

} // namespace hypoheat::sfn
