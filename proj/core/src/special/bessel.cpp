#include "hypoheat/special/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypoheat::sfn {

namespace {

// log of the ascending series sum_m (x/2)^{2m+nu} / (m! Gamma(m+nu+1)),
// accumulated relative to the running maximum term.
double log_series_i(double nu, double x) {
    const double lh = std::log(0.5 * x);
    double lterm = nu * lh - std::lgamma(nu + 1.0);
    double lmax = lterm;
    double acc = 1.0; // sum of exp(lterm - lmax)
    for (int m = 1; m < 100000; ++m) {
        lterm += 2.0 * lh - std::log(static_cast<double>(m)) - std::log(nu + m);
        if (lterm > lmax) {
            acc = acc * std::exp(lmax - lterm) + 1.0;
            lmax = lterm;
        } else {
            const double d = std::exp(lterm - lmax);
            acc += d;
            if (d < 1e-18 * acc && m > x) break;
        }
    }
    return lmax + std::log(acc);
}

// log of e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(nu)/x^k, valid x >> nu^2.
double log_asymptotic_i(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        term *= -f;
        if (std::abs(term) > prev) break; // divergent tail: stop at smallest term
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

} // namespace

double log_besseli(double nu, double x) {
    if (nu < 0.0 || x < 0.0) throw std::domain_error("log_besseli: need nu >= 0, x >= 0");
    if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (x > 40.0 && x > 2.25 * nu * nu) return log_asymptotic_i(nu, x);
    return log_series_i(nu, x);
}

double besseli(double nu, double x) { return std::exp(log_besseli(nu, x)); }

double besselk(double nu, double x) {
    if (x <= 0.0) throw std::domain_error("besselk: need x > 0");
    if (x > 600.0) return std::exp(log_besselk(nu, x));
    return std::cyl_bessel_k(nu, x);
}

double log_besselk(double nu, double x) {
    if (x <= 0.0) throw std::domain_error("log_besselk: need x > 0");
    if (x <= 600.0) {
        const double v = std::cyl_bessel_k(nu, x);
        if (v > 0.0 && std::isfinite(v)) return std::log(v);
    }
    // e^{-x} sqrt(pi/2x) * sum_k a_k(nu)/x^k
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        term *= f;
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return -x + 0.5 * std::log(M_PI / (2.0 * x)) + std::log(sum);
}

} // namespace hypoheat::sfn
