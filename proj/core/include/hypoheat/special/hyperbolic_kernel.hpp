#pragma once

#include <utility>

#include "hypoheat/special/spectral_kernel.hpp"

namespace hypoheat::sfn {

enum class HyperbolicMethod { Millson, Gruet };

/// Heat kernel q_{t,d}(r) on the d-dimensional real hyperbolic space, density
/// w.r.t. Riemannian volume, native HalfGenerator convention (e^{t Delta/2}).
/// Millson: closed derivative formulas (odd d), one integral layer (even d).
/// Gruet: oscillatory integral, any d >= 2.
double hyperbolic_kernel(int d, double t, double r,
                         HyperbolicMethod method = HyperbolicMethod::Millson);

/// log q_{t,d}(r) for odd d (HalfGenerator), stable at large r where the
/// kernel under/overflows; returns (log_abs, sign).
std::pair<double, double> hyperbolic_kernel_log(int d, double t, double r);

/// Same kernel in the FullGenerator convention (e^{t Delta}).
inline double hyperbolic_kernel_full(int d, double t, double r,
                                     HyperbolicMethod m = HyperbolicMethod::Millson) {
    return hyperbolic_kernel(d, 2.0 * t, r, m);
}

/// Radial heat kernel on CH^n (generator L^{n-1,0} = (1/2)(d^2/dr^2 +
/// ((2n-1)coth r + tanh r) d/dr)), density w.r.t. the CH^n radial measure.
double ch_kernel(int n, double t, double r);

/// Radial heat kernel on HH^n (generator L^{2n-1,1}), density w.r.t. the HH^n
/// radial measure. n >= 2.
double hh_kernel(int n, double t, double r);

/// Radial measures of Appendix-type rank-one spaces.
double hyperbolic_radial_measure(int d, double r);   // H^d
double ch_radial_measure(int n, double r);           // CH^n
double hh_radial_measure(int n, double r);           // HH^n
double cp_radial_measure(int n, double r);           // CP^n
double hp_radial_measure(int n, double r);           // HP^n
double op1_radial_measure(double r);                 // OP^1
double oh1_radial_measure(double r);                 // OH^1

} // namespace hypoheat::sfn
