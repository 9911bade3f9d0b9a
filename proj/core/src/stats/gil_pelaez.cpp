#include "hypoheat/stats/gil_pelaez.hpp"

#include <cmath>

#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::stats {

InversionResult gil_pelaez_cdf(const std::function<double(double)>& cf_real, double x) {
    // Im(e^{-ilx} phi) = -sin(lx) phi(l) for real phi
    InversionResult out;
    auto f = [&](double l) { return std::sin(l * x) * cf_real(l) / l; };
    // integrate in chunks of the sine period to keep the adaptive rule honest
    const double period = x == 0.0 ? 8.0 : 2.0 * M_PI / std::abs(x);
    double total = 0.0;
    double a = 0.0;
    bool conv = true;
    for (int k = 0; k < 4000; ++k) {
        const double b = a + std::min(period, 4.0);
        sfn::QuadResult q = sfn::integrate(f, std::max(a, 1e-300), b, 1e-12, 12);
        total += q.value;
        conv = conv && q.converged;
        if (std::abs(cf_real(b)) < 1e-14 && k > 2) break;
        a = b;
    }
    out.value = 0.5 + total / M_PI;
    out.converged = conv;
    return out;
}

InversionResult gil_pelaez_cdf_c(const std::function<std::complex<double>(double)>& cf,
                                 double x) {
    InversionResult out;
    auto f = [&](double l) {
        const std::complex<double> e(std::cos(l * x), -std::sin(l * x));
        return (e * cf(l)).imag() / l;
    };
    const double period = x == 0.0 ? 8.0 : 2.0 * M_PI / std::abs(x);
    double total = 0.0, a = 0.0;
    bool conv = true;
    for (int k = 0; k < 4000; ++k) {
        const double b = a + std::min(period, 4.0);
        sfn::QuadResult q = sfn::integrate(f, std::max(a, 1e-300), b, 1e-12, 12);
        total += q.value;
        conv = conv && q.converged;
        if (std::abs(cf(b)) < 1e-14 && k > 2) break;
        a = b;
    }
    out.value = 0.5 - total / M_PI;
    out.converged = conv;
    return out;
}

InversionResult fourier_density(const std::function<double(double)>& cf_real, double x) {
    InversionResult out;
    auto f = [&](double l) { return std::cos(l * x) * cf_real(l); };
    const double period = x == 0.0 ? 8.0 : 2.0 * M_PI / std::abs(x);
    double total = 0.0, a = 0.0;
    bool conv = true;
    for (int k = 0; k < 4000; ++k) {
        const double b = a + std::min(period, 4.0);
        sfn::QuadResult q = sfn::integrate(f, a, b, 1e-13, 12);
        total += q.value;
        conv = conv && q.converged;
        if (std::abs(cf_real(b)) < 1e-15 && k > 2) break;
        a = b;
    }
    out.value = total / M_PI;
    out.converged = conv;
    return out;
}

InversionResult radial_fourier_density(const std::function<double(double)>& cf_radial,
                                       int dim, double rho) {
    // f(x) = (2pi)^{-d} int phi(|l|) e^{-i l.x} dl
    //      = (2pi)^{-d} S_{d-1} int_0^inf phi(r) r^{d-1} m_d(r rho) dr,
    // m_d the spherical average of e^{-i r rho u.e}: m_1 = cos, m_3 = sinc,
    // m_7 = 15((3 - z^2) sin z - 3 z cos z)/z^5 -- computed from Bessel J_{d/2-1}.
    InversionResult out;
    auto mean_wave = [dim](double z) {
        if (z < 1e-6) {
            // 1 - z^2/(2d) + O(z^4)
            return 1.0 - z * z / (2.0 * dim);
        }
        if (dim == 1) return std::cos(z);
        if (dim == 3) return std::sin(z) / z;
        if (dim == 7) {
            const double z2 = z * z;
            return 15.0 * ((3.0 - z2) * std::sin(z) - 3.0 * z * std::cos(z)) / (z2 * z2 * z);
        }
        return 0.0;
    };
    const double surf = 2.0 * std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
    auto f = [&](double r) {
        return cf_radial(r) * std::pow(r, dim - 1.0) * mean_wave(r * rho);
    };
    const double period = rho == 0.0 ? 8.0 : 2.0 * M_PI / rho;
    double total = 0.0, a = 0.0;
    bool conv = true;
    for (int k = 0; k < 4000; ++k) {
        const double b = a + std::min(period, 4.0);
        sfn::QuadResult q = sfn::integrate(f, a, b, 1e-13, 12);
        total += q.value;
        conv = conv && q.converged;
        if (std::abs(cf_radial(b)) * std::pow(b, dim - 1.0) < 1e-15 && k > 2) break;
        a = b;
    }
    out.value = total * surf / std::pow(2.0 * M_PI, dim);
    out.converged = conv;
    return out;
}

} // namespace hypoheat::stats
