#include "hypoheat/fibration/area_cf.hpp"

#include <cmath>
#include <stdexcept>

#include "hypoheat/special/circular_jacobi.hpp"
#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::fib {

double girsanov_mu(const FibrationModel& model, double lambda_norm) {
    const double b = model.beta();
    return std::sqrt(b * b + lambda_norm * lambda_norm) - b;
}

double area_cf_conditional(const FibrationModel& model, double lambda_norm, double t,
                           double r) {
    if (lambda_norm == 0.0) return 1.0;
    const double a = model.alpha(), b = model.beta();
    const double mu = girsanov_mu(model, lambda_norm);
    const double p = model.girsanov_power();
    if (model.compact()) {
        const double num = sfn::circular_jacobi_kernel0(a, b + mu, t, r).require();
        const double den = sfn::circular_jacobi_kernel0(a, b, t, r).require();
        return std::exp(-p * mu * t - mu * std::log(std::cos(r))) * num / den;
    }
    sfn::HyperbolicJacobiKernel num(a, b + mu, t);
    sfn::HyperbolicJacobiKernel den(a, b, t);
    return std::exp(p * mu * t - mu * std::log(std::cosh(r))) * num.density(r) /
           den.density(r);
}

double area_cf_marginal(const FibrationModel& model, double lambda_norm, double t) {
    if (lambda_norm == 0.0) return 1.0;
    const double a = model.alpha(), b = model.beta();
    const double mu = girsanov_mu(model, lambda_norm);
    const double p = model.girsanov_power();
    if (model.compact()) {
        auto f = [&](double r) {
            return sfn::circular_jacobi_kernel0(a, b + mu, t, r).require() *
                   std::pow(std::cos(r), -mu);
        };
        const double val = sfn::integrate(f, 1e-10, M_PI_2 - 1e-10, 1e-11).value;
        return std::exp(-p * mu * t) * val;
    }
    sfn::HyperbolicJacobiKernel ker(a, b + mu, t);
    const double val =
        ker.integrate([&](double r) { return std::pow(std::cosh(r), -mu); });
    return std::exp(p * mu * t) * val;
}

} // namespace hypoheat::fib
