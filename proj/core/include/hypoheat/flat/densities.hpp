#pragma once

namespace hypoheat::flat {

/// Planar stochastic-area densities, constants re-derived by Fourier
/// inversion of the Levy CFs (the printed constants are recorded as errata in
/// the docs): loop density (pi/4t) sech^2(pi s/2t), free density
/// (1/2t) sech(pi s/2t).
double planar_area_density(double t, double s, bool conditioned_on_loop);

/// Density of the quaternionic stochastic area at phi in R^3 (isotropic),
/// double-integral form of the inverse Fourier transform of cosh^{-2n}.
double quat_area_density(int n, double t, double phi_norm);

/// Biane-Yor moment E|S(t)|^alpha = 2^{alpha+2} Gamma(1+alpha)/pi^{1+alpha}
/// L(1+alpha) t^alpha with L the Dirichlet beta function.
double area_moment(double alpha, double t);

/// Dirichlet beta L(s) = sum (-1)^n/(2n+1)^s, accelerated alternating sum.
double dirichlet_beta(double s);

/// Matrix-trace area CF (cosh(lambda t))^{-nm} of the Laguerre model.
double laguerre_trace_cf(int n, int m, double lambda, double t);

} // namespace hypoheat::flat
