#pragma once

#include "hypoheat/fibration/models.hpp"
#include "hypoheat/special/pde_jacobi.hpp"

namespace hypoheat::fib {

/// Conditional area CF E[e^{i lambda . a(t)} | r(t) = r]: the Girsanov ratio
/// e^{-(alpha+1) mu t} (cos r)^{-mu} q_t^{alpha, beta+mu}(0,r)/q_t^{alpha,beta}(0,r)
/// for the compact models (hyperbolic: e^{+(alpha+1) mu t}, cosh, hyperbolic
/// kernels via the Crank-Nicolson solver), with mu = sqrt(beta^2 + |lambda|^2)
/// - beta.
double area_cf_conditional(const FibrationModel& model, double lambda_norm, double t,
                           double r);

/// Marginal CF E[e^{i lambda . a(t)}] by quadrature over the radial kernel.
double area_cf_marginal(const FibrationModel& model, double lambda_norm, double t);

/// mu(lambda) of the model's Girsanov transform.
double girsanov_mu(const FibrationModel& model, double lambda_norm);

} // namespace hypoheat::fib
