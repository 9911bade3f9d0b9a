#pragma once

#include "hypoheat/special/spectral_kernel.hpp"

namespace hypoheat::sfn {

/// Transition density q_t^{a,b}(r0, r) w.r.t. Lebesgue on [0, pi/2] of the
/// circular Jacobi diffusion with generator
///   (1/2) d^2/dr^2 + ((a+1/2) cot r - (b+1/2) tan r) d/dr,  a,b > -1.
/// Native HalfGenerator convention (it is a diffusion semigroup).
SeriesEval circular_jacobi_kernel(double a, double b, double t, double r0, double r,
                                  const TruncationPolicy& pol = {});

/// Entrance-point series q_t^{a,b}(0, r), a >= 0.
SeriesEval circular_jacobi_kernel0(double a, double b, double t, double r,
                                   const TruncationPolicy& pol = {});

/// Kernel p_t^{a,b}(u,v) on [-1,1] of e^{2t G_{a,b}},
///   G_{a,b} = (1-v^2) d^2/dv^2 - ((a+b+2)v + a - b) d/dv,
/// i.e. the cos(2r)-image of the circular Jacobi diffusion run at time t.
SeriesEval jacobi_interval_kernel(double a, double b, double t, double u, double v,
                                  const TruncationPolicy& pol = {});

/// Stationary density of the circular Jacobi diffusion on [0, pi/2]:
///   2 Gamma(a+b+2)/(Gamma(a+1)Gamma(b+1)) cos^{2b+1} r sin^{2a+1} r.
double circular_jacobi_stationary(double a, double b, double r);

} // namespace hypoheat::sfn
