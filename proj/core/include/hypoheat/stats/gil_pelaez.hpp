#pragma once

#include <complex>
#include <functional>

namespace hypoheat::stats {

struct InversionResult {
    double value = 0.0;
    bool converged = true;
};

/// Gil-Pelaez inversion  F(x) = 1/2 - (1/pi) int_0^inf Im(e^{-i l x} phi(l))/l dl
/// for a real (symmetric-law) or complex CF with integrable decay.
InversionResult gil_pelaez_cdf(const std::function<double(double)>& cf_real, double x);
InversionResult gil_pelaez_cdf_c(const std::function<std::complex<double>(double)>& cf,
                                 double x);

/// Density by Fourier inversion f(x) = (1/2 pi) int e^{-i l x} phi(l) dl for an
/// even real CF: (1/pi) int_0^inf cos(l x) phi(l) dl.
InversionResult fourier_density(const std::function<double(double)>& cf_real, double x);

/// d-dimensional isotropic Fourier inversion at radius |x| = rho of a radial
/// CF phi(|lambda|) (d = 1, 3, or 7 here): reduces to a 1-D oscillatory
/// integral with the surface-measure kernel.
InversionResult radial_fourier_density(const std::function<double(double)>& cf_radial,
                                       int dim, double rho);

} // namespace hypoheat::stats
