#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace hypoheat::sfn {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Gauss-Legendre nodes/weights on [-1,1].
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre on [a,b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n = 20);

/// Adaptive bisection with GL(10)/GL(20) error control.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, int max_depth = 16);

/// Semi-infinite integral of a decaying integrand: maps [a,inf) -> [0,1) via
/// x = a + scale*u/(1-u) and integrates adaptively.
QuadResult integrate_semiinf(const std::function<double(double)>& f, double a,
                             double scale = 1.0, double tol = 1e-10);

/// Gauss-Laguerre nodes/weights for int_0^inf f(x) e^{-x} dx ~ sum w_i f(x_i).
std::vector<std::pair<double, double>> gauss_laguerre(int n);

/// Oscillatory integral int_0^inf g(rho) sin(pi rho / t) drho, summed over
/// half-periods of the sine with pairwise cancellation; `converged` is false
/// when two successive refinements disagree by more than check_tol relative.
QuadResult integrate_oscillatory_halfperiods(const std::function<double(double)>& g,
                                             double period, double tail_cut,
                                             double check_tol = 1e-7);

} // namespace hypoheat::sfn
