#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hypoheat/stats/report.hpp"

namespace hypoheat::stats {

/// One-sample Kolmogorov-Smirnov against a reference CDF; asymptotic p-value.
TestReport ks_test(std::span<const double> samples,
                   const std::function<double(double)>& cdf, double threshold,
                   const std::string& name);

/// Two-sample KS.
TestReport two_sample_ks(std::span<const double> a, std::span<const double> b,
                         double threshold, const std::string& name);

/// The raw statistics without report wrapping.
double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf);
double two_sample_ks_statistic(std::span<const double> a, std::span<const double> b);
double ks_p_value(double statistic, double n_effective);

/// Chi-square goodness of fit of samples against a density on [lo, hi] with
/// `bins` equal-width cells (cells with expected count < 5 merged outward).
/// Reports the p-value as the statistic and passes when p > threshold.
TestReport chi2_density_test(std::span<const double> samples,
                             const std::function<double(double)>& density, double lo,
                             double hi, int bins, double p_threshold,
                             const std::string& name);

double chi2_sf(double x, double dof); // upper tail of chi-square

} // namespace hypoheat::stats
