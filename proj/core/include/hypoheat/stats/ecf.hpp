#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hypoheat::stats {

struct EcfPoint {
    std::complex<double> value;
    double se_re = 0.0;
    double se_im = 0.0;
};

/// Empirical characteristic function (1/N) sum e^{i lambda X} with standard
/// errors from the sample variances of the cosine/sine parts. Needs >= 100
/// samples.
std::vector<EcfPoint> empirical_cf(std::span<const double> samples,
                                   std::span<const double> lambdas);

/// Multivariate version: samples row-major [n][dim], lambdas row-major
/// [m][dim].
std::vector<EcfPoint> empirical_cf_multi(std::span<const double> samples, std::size_t dim,
                                         std::span<const double> lambdas);

} // namespace hypoheat::stats
