#pragma once

#include <functional>
#include <vector>

namespace hypoheat::sfn {

/// Crank-Nicolson solver for the hyperbolic Jacobi transition density
/// q_t^{a,b}(0, r) w.r.t. Lebesgue, generator
///   (1/2) d^2/dr^2 + ((a+1/2) coth r + (b+1/2) tanh r) d/dr,
/// entrance start at r = 0 (initialized from the exact short-time Bessel(2a+2)
/// profile), Neumann at 0 via zero flux, absorbing far boundary placed from
/// the drift scale. There is no elementary closed form for general b, which
/// is exactly why this route exists.
class HyperbolicJacobiKernel {
public:
    struct Options {
        int cells = 4000;
        double dt_target = 5e-4;
        double t0 = 1e-3;          // short-time initialization horizon
        double domain_pad = 10.0;  // extra width beyond the drift displacement
        bool refine_check = true;  // half-resolution comparison for the error estimate
    };

    HyperbolicJacobiKernel(double a, double b, double t, const Options& opt);
    HyperbolicJacobiKernel(double a, double b, double t)
        : HyperbolicJacobiKernel(a, b, t, Options{}) {}

    double density(double r) const;                      // linear interpolation
    double integrate(const std::function<double(double)>& f) const;
    double mass() const;               // total remaining mass (1 - absorbed)
    double refine_error() const { return refine_error_; }
    bool domain_warning() const { return far_mass_ > 1e-8; }
    double r_max() const { return r_max_; }

private:
    std::vector<double> evolve(int cells, double dt) const;
    double density_from(const std::vector<double>& p, double r) const;

    double a_, b_, t_;
    Options opt_;
    double r_max_ = 0.0, h_ = 0.0;
    std::vector<double> p_; // cell averages at centers (i+1/2)h
    double refine_error_ = 0.0;
    double far_mass_ = 0.0;
};

} // namespace hypoheat::sfn
