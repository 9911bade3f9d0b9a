#include "hypoheat/special/su2_kernel.hpp"

#include <cmath>
#include <complex>

#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::sfn {

double su2_radial_kernel(double t, double eta, double u, bool theta_form) {
    if (!theta_form) {
        // (2/(pi sin eta sin u)) sum_m e^{-m(m+2)t} sin((m+1)eta) sin((m+1)u)
        double sum = 0.0;
        for (int m = 0;; ++m) {
            const double term = std::exp(-m * (m + 2.0) * t) * std::sin((m + 1.0) * eta) *
                                std::sin((m + 1.0) * u);
            sum += term;
            if (std::exp(-m * (m + 2.0) * t) < 1e-17 && m > 2) break;
            if (m > 4000) break;
        }
        return 2.0 / (M_PI * std::sin(eta) * std::sin(u)) * sum;
    }
    // (e^t / (sqrt(pi t) sin eta sin u)) sum_k sinh((eta+2k pi) u / 2t)
    //   e^{-(u^2+(eta+2k pi)^2)/4t}
    double sum = 0.0;
    for (int k = 0; k < 64; ++k) {
        double shell = 0.0;
        const double xp = eta + 2.0 * M_PI * k;
        shell += std::sinh(xp * u / (2.0 * t)) * std::exp(-(u * u + xp * xp) / (4.0 * t));
        if (k > 0) {
            const double xm = eta - 2.0 * M_PI * k;
            shell += std::sinh(xm * u / (2.0 * t)) * std::exp(-(u * u + xm * xm) / (4.0 * t));
        }
        sum += shell;
        if (std::abs(shell) < 1e-18 * std::abs(sum) && k >= 2) break;
    }
    return std::exp(t) / (std::sqrt(M_PI * t) * std::sin(eta) * std::sin(u)) * sum;
}

SeriesEval sl2_transform(const std::function<double(double)>& f, double t, double eta) {
    SeriesEval out;
    auto g = [&](double s) {
        return std::sinh(s) * std::sinh(eta * s / (2.0 * t)) *
               std::exp(-(s * s + eta * eta) / (4.0 * t)) * f(s);
    };
    // the integrand decays like e^{-(s-..)^2/4t} once f decays; cut generously
    const double smax = eta + 2.0 * t + 14.0 * std::sqrt(t) + 5.0;
    QuadResult q = integrate(g, 0.0, smax, 1e-12, 18);
    out.value = std::exp(-t) / (std::sqrt(M_PI * t) * std::sinh(eta)) * q.value;
    out.converged = q.converged;
    out.tail_bound = q.error_estimate;
    return out;
}

double s7_eigenfunction(int m, double eta) {
    // Gamma(7/2)/(sqrt(pi) Gamma(3)) int_0^pi (cos eta + i sin eta cos phi)^m sin^5 phi dphi
    const double norm = std::tgamma(3.5) / (std::sqrt(M_PI) * 2.0);
    auto f = [&](double phi) {
        const std::complex<double> z(std::cos(eta), std::sin(eta) * std::cos(phi));
        return (std::pow(z, m) * std::pow(std::sin(phi), 5.0)).real();
    };
    return norm * integrate(f, 0.0, M_PI, 1e-13, 14).value;
}

std::complex<double> s7_eigenfunction_c(int m, std::complex<double> eta) {
    const double norm = std::tgamma(3.5) / (std::sqrt(M_PI) * 2.0);
    const std::complex<double> ce = std::cos(eta), se = std::sin(eta);
    const auto& nw = gauss_legendre(64);
    std::complex<double> sum = 0.0;
    for (const auto& [x, w] : nw) {
        const double phi = 0.5 * M_PI * (x + 1.0);
        const std::complex<double> z = ce + std::complex<double>(0, 1) * se * std::cos(phi);
        sum += w * std::pow(z, m) * std::pow(std::sin(phi), 5.0);
    }
    return norm * 0.5 * M_PI * sum;
}

double s7_eigenfunction_norm_sq(int m) {
    // sqrt(pi) Gamma(7/2) 6! m! / (Gamma(4) (2m+6) (m+5)!)
    return std::sqrt(M_PI) * std::tgamma(3.5) * 720.0 *
           std::exp(std::lgamma(m + 1.0) - std::lgamma(m + 6.0)) / (6.0 * (2.0 * m + 6.0));
}

std::complex<double> s7_radial_kernel(double t, double eta, std::complex<double> u,
                                      const TruncationPolicy& pol) {
    // at complex angles the eigenfunctions grow like e^{m |Im u|}: keep the
    // truncation against the grown terms, not the bare Gaussian decay
    const double growth = std::abs(u.imag());
    std::complex<double> sum = 0.0;
    for (int m = 0; m < pol.m_max; ++m) {
        const double logterm = -m * (m + 6.0) * t + m * growth;
        if (logterm < std::log(pol.eps_tail * 1e-2) && m > growth / (2.0 * t) + 2.0)
            break;
        sum += std::exp(-m * (m + 6.0) * t) * s7_eigenfunction(m, eta) *
               s7_eigenfunction_c(m, u) / s7_eigenfunction_norm_sq(m);
    }
    return sum;
}

} // namespace hypoheat::sfn
