#include "hypoheat/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::stats {

double ks_statistic(std::span<const double> samples,
                    const std::function<double(double)>& cdf) {
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max(d, std::abs(f - i / n));
        d = std::max(d, std::abs((i + 1) / n - f));
    }
    return d;
}

double two_sample_ks_statistic(std::span<const double> a, std::span<const double> b) {
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] <= y[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / x.size() -
                                 static_cast<double>(j) / y.size()));
    }
    return d;
}

double ks_p_value(double statistic, double n_effective) {
    const double z = (std::sqrt(n_effective) + 0.12 + 0.11 / std::sqrt(n_effective)) * statistic;
    // Q_KS(z) = 2 sum (-1)^{k-1} e^{-2 k^2 z^2}
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * z * z);
        sum += term;
        if (std::abs(term) < 1e-14) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

TestReport ks_test(std::span<const double> samples,
                   const std::function<double(double)>& cdf, double threshold,
                   const std::string& name) {
    TestReport r;
    r.name = name;
    r.sample_size = samples.size();
    r.statistic = ks_statistic(samples, cdf);
    r.threshold = threshold;
    r.pass = r.statistic <= threshold;
    return r;
}

TestReport two_sample_ks(std::span<const double> a, std::span<const double> b,
                         double threshold, const std::string& name) {
    TestReport r;
    r.name = name;
    r.sample_size = a.size();
    r.statistic = two_sample_ks_statistic(a, b);
    r.threshold = threshold;
    r.pass = r.statistic <= threshold;
    return r;
}

namespace {

// regularized upper incomplete gamma Q(a, x), series / continued fraction
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::domain_error("gamma_q");
    if (x == 0) return 1.0;
    if (x < a + 1.0) {
        // P(a,x) by series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // Q(a,x) by Lentz continued fraction
    double b = x + 1.0 - a, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

TestReport chi2_density_test(std::span<const double> samples,
                             const std::function<double(double)>& density, double lo,
                             double hi, int bins, double p_threshold,
                             const std::string& name) {
    std::vector<double> expected(bins, 0.0), observed(bins, 0.0);
    const double w = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b)
        expected[b] = sfn::integrate(density, lo + b * w, lo + (b + 1) * w, 1e-10).value *
                      samples.size();
    std::size_t inside = 0;
    for (double x : samples) {
        if (x < lo || x >= hi) continue;
        ++observed[std::min<int>(bins - 1, static_cast<int>((x - lo) / w))];
        ++inside;
    }
    (void)inside;
    // merge cells with small expectation into neighbours
    std::vector<double> e2, o2;
    double ea = 0, oa = 0;
    for (int b = 0; b < bins; ++b) {
        ea += expected[b];
        oa += observed[b];
        if (ea >= 5.0) {
            e2.push_back(ea);
            o2.push_back(oa);
            ea = oa = 0;
        }
    }
    if (ea > 0 && !e2.empty()) {
        e2.back() += ea;
        o2.back() += oa;
    }
    double stat = 0.0;
    for (std::size_t b = 0; b < e2.size(); ++b) {
        const double diff = o2[b] - e2[b];
        stat += diff * diff / e2[b];
    }
    const double dof = static_cast<double>(e2.size()) - 1.0;
    TestReport r;
    r.name = name;
    r.sample_size = samples.size();
    r.statistic = dof > 0 ? chi2_sf(stat, dof) : 1.0; // the p-value
    r.threshold = p_threshold;
    r.higher_is_better = true;
    r.pass = r.statistic > p_threshold;
    return r;
}

} // namespace hypoheat::stats
