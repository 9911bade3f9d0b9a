#pragma once

#include "hypoheat/special/spectral_kernel.hpp"

namespace hypoheat::sfn {

/// Heat kernel h_d(t, delta) on the d-dimensional unit sphere (distance delta
/// from the source, native FullGenerator convention e^{t Delta}), as a density
/// w.r.t. the Riemannian volume. Gegenbauer spectral route; d >= 2.
SeriesEval sphere_kernel_series(int d, double t, double delta,
                                const TruncationPolicy& pol = {});

/// Same kernel for odd d = 2n+1 through the theta-sum route
///   h = e^{n^2 t} (-(1/(2 pi sin delta)) d/d delta)^n V(t, delta).
double sphere_kernel_theta(int d, double t, double delta);

/// Analytic continuation of the odd-d kernel to arguments cos(delta) = x > 1,
/// evaluated at delta = i*arcosh(x) through the theta route.
double sphere_kernel_continued(int d, double t, double cosh_u);

/// Kernel as a function of x = cos(delta); dispatches to the series/theta
/// evaluation for |x| <= 1 and to the continuation for x > 1 (odd d only).
double sphere_kernel_x(int d, double t, double x);

/// Radial measure density of S^d: 2 pi^{d/2}/Gamma(d/2) (sin r)^{d-1}.
double sphere_radial_measure(int d, double r);

} // namespace hypoheat::sfn
