#include "hypoheat/stats/laws.hpp"

#include <stdexcept>

#include "hypoheat/special/bessel.hpp"
#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/stats/gil_pelaez.hpp"

namespace hypoheat::stats {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

LawDescriptor cauchy_law(double c) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::Cauchy;
    l.p1 = c;
    l.name = "cauchy(" + std::to_string(c) + ")";
    return l;
}

LawDescriptor gaussian_law(double mean, double variance, int dim) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::Gaussian;
    l.p1 = mean;
    l.p2 = variance;
    l.dim = dim;
    l.name = "gaussian(" + std::to_string(mean) + "," + std::to_string(variance) + ")";
    return l;
}

LawDescriptor isotropic_cauchy_law(int dim, double c) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::IsotropicCauchy;
    l.dim = dim;
    l.p1 = c;
    l.name = "isotropic_cauchy(d=" + std::to_string(dim) + "," + std::to_string(c) + ")";
    return l;
}

LawDescriptor relativistic_cauchy_law(double y) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::RelativisticCauchy;
    l.dim = 3;
    l.p1 = y;
    l.name = "relativistic_cauchy(" + std::to_string(y) + ")";
    return l;
}

LawDescriptor beta_product_law(int k, int n_minus_k) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::BetaProduct;
    for (int j = 1; j <= k; ++j) l.beta_params.emplace_back(j, n_minus_k);
    l.name = "beta_product(k=" + std::to_string(k) + ",n-k=" + std::to_string(n_minus_k) + ")";
    return l;
}

LawDescriptor hitting_time_law(double level) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::HittingTime;
    l.p1 = level;
    l.name = "hitting_time(" + std::to_string(level) + ")";
    return l;
}

LawDescriptor custom_cf_law(std::function<double(double)> cf, int dim, std::string name) {
    LawDescriptor l;
    l.family = LawDescriptor::Family::CustomCf;
    l.custom_cf = std::move(cf);
    l.dim = dim;
    l.name = std::move(name);
    return l;
}

namespace {

double gamma_sample(double shape, sde::Rng& rng) {
    // Marsaglia-Tsang; shape >= 1 here (boosted for shape < 1)
    if (shape < 1.0) {
        const double u = rng.uniform();
        return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double beta_sample(double a, double b, sde::Rng& rng) {
    const double x = gamma_sample(a, rng);
    const double y = gamma_sample(b, rng);
    return x / (x + y);
}

} // namespace

double beta_product_mellin(int k, int n_minus_k, double s) {
    // E[prod Beta(j, n-k)^{s/2}] = prod_j B(j + s/2, n-k)/B(j, n-k)
    double logm = 0.0;
    for (int j = 1; j <= k; ++j) {
        logm += std::lgamma(j + 0.5 * s) - std::lgamma(j) +
                std::lgamma(j + n_minus_k) - std::lgamma(j + n_minus_k + 0.5 * s);
    }
    return std::exp(logm);
}

ReferenceLaw reference_law(const LawDescriptor& law) {
    ReferenceLaw r;
    r.name = law.name;
    switch (law.family) {
        case LawDescriptor::Family::Cauchy: {
            const double c = law.p1;
            r.cdf = [c](double x) { return 0.5 + std::atan(x / c) / M_PI; };
            r.cf = [c](double l) { return std::exp(-c * std::abs(l)); };
            r.sample = [c](sde::Rng& g) { return c * std::tan(M_PI * (g.uniform() - 0.5)); };
            break;
        }
        case LawDescriptor::Family::Gaussian: {
            const double mu = law.p1, v = law.p2, sd = std::sqrt(law.p2);
            r.cdf = [mu, sd](double x) { return normal_cdf((x - mu) / sd); };
            r.cf = [mu, v](double l) { return std::exp(-0.5 * v * l * l) * std::cos(mu * l); };
            r.sample = [mu, sd](sde::Rng& g) { return mu + sd * g.normal(); };
            break;
        }
        case LawDescriptor::Family::IsotropicCauchy: {
            // one coordinate of an isotropic Cauchy is Cauchy(c)
            return reference_law(cauchy_law(law.p1));
        }
        case LawDescriptor::Family::RelativisticCauchy: {
            const double y = law.p1;
            auto cf = [y](double l) { return std::exp(-y * (std::sqrt(l * l + 1.0) - 1.0)); };
            r.cf = cf;
            r.cdf = [cf](double x) { return gil_pelaez_cdf(cf, x).value; };
            r.sample = nullptr;
            break;
        }
        case LawDescriptor::Family::BetaProduct: {
            auto params = law.beta_params;
            r.sample = [params](sde::Rng& g) {
                double prod = 1.0;
                for (auto [a, b] : params) prod *= beta_sample(a, b, g);
                return std::sqrt(prod); // the modulus rho_inf
            };
            r.cdf = nullptr;
            r.cf = nullptr;
            break;
        }
        case LawDescriptor::Family::HittingTime: {
            const double a = law.p1;
            r.cdf = [a](double x) { return x <= 0.0 ? 0.0 : std::erfc(a / std::sqrt(2.0 * x)); };
            r.cf = nullptr;
            r.sample = [a](sde::Rng& g) {
                const double z = g.normal();
                return a * a / (z * z);
            };
            break;
        }
        case LawDescriptor::Family::CustomCf: {
            auto cf = law.custom_cf;
            r.cf = cf;
            r.cdf = [cf](double x) { return gil_pelaez_cdf(cf, x).value; };
            r.sample = nullptr;
            break;
        }
    }
    return r;
}

ReferenceLaw reference_law_radial(const LawDescriptor& law) {
    ReferenceLaw r;
    r.name = law.name + "|radial";
    const int d = law.dim;
    switch (law.family) {
        case LawDescriptor::Family::Gaussian: {
            // |X|^2 / variance ~ chi^2_d; use the CDF via the incomplete gamma
            // computed by quadrature of the chi density (d small).
            const double v = law.p2;
            r.cdf = [d, v](double x) {
                if (x <= 0) return 0.0;
                auto dens = [d, v](double s) {
                    const double logc = -0.5 * d * std::log(2.0 * v) - std::lgamma(0.5 * d) +
                                        std::log(2.0);
                    return std::exp(logc + (d - 1.0) * std::log(s) - s * s / (2.0 * v));
                };
                const double hi = std::min(x, 14.0 * std::sqrt(v));
                return sfn::integrate(dens, 0.0, hi, 1e-10).value;
            };
            break;
        }
        case LawDescriptor::Family::IsotropicCauchy: {
            const double c = law.p1;
            // radial density ~ r^{d-1} / (c^2 + r^2)^{(d+1)/2}
            const double logc = std::lgamma(0.5 * (d + 1.0)) - std::lgamma(0.5 * d) -
                                0.5 * std::log(M_PI);
            r.cdf = [d, c, logc](double x) {
                if (x <= 0) return 0.0;
                auto dens = [&](double s) {
                    return 2.0 * std::exp(logc) * std::pow(s, d - 1.0) * c /
                           std::pow(c * c + s * s, 0.5 * (d + 1.0));
                };
                const double cut = 300.0 * c;
                if (x <= cut) return sfn::integrate(dens, 0.0, x, 1e-10).value;
                // tail ~ 2 e^{logc} c / s^2: integrate the remainder analytically
                const double head = sfn::integrate(dens, 0.0, cut, 1e-10).value;
                return head + 2.0 * std::exp(logc) * c * (1.0 / cut - 1.0 / x);
            };
            break;
        }
        default:
            throw std::invalid_argument("reference_law_radial: unsupported family");
    }
    return r;
}

} // namespace hypoheat::stats
