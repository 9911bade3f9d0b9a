#include "hypoheat/stats/ecf.hpp"

#include <cmath>
#include <stdexcept>

namespace hypoheat::stats {

namespace {

EcfPoint from_parts(double sc, double ss, double sc2, double ss2, std::size_t n) {
    EcfPoint p;
    const double mc = sc / n, ms = ss / n;
    p.value = {mc, ms};
    const double vc = std::max(0.0, sc2 / n - mc * mc);
    const double vs = std::max(0.0, ss2 / n - ms * ms);
    p.se_re = std::sqrt(vc / n);
    p.se_im = std::sqrt(vs / n);
    return p;
}

} // namespace

std::vector<EcfPoint> empirical_cf(std::span<const double> samples,
                                   std::span<const double> lambdas) {
    if (samples.size() < 100) throw std::invalid_argument("empirical_cf: need >= 100 samples");
    std::vector<EcfPoint> out;
    out.reserve(lambdas.size());
    for (double lam : lambdas) {
        double sc = 0, ss = 0, sc2 = 0, ss2 = 0;
        for (double x : samples) {
            const double c = std::cos(lam * x), s = std::sin(lam * x);
            sc += c;
            ss += s;
            sc2 += c * c;
            ss2 += s * s;
        }
        out.push_back(from_parts(sc, ss, sc2, ss2, samples.size()));
    }
    return out;
}

std::vector<EcfPoint> empirical_cf_multi(std::span<const double> samples, std::size_t dim,
                                         std::span<const double> lambdas) {
    const std::size_t n = samples.size() / dim;
    if (n < 100) throw std::invalid_argument("empirical_cf_multi: need >= 100 samples");
    const std::size_t m = lambdas.size() / dim;
    std::vector<EcfPoint> out;
    out.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double* lam = lambdas.data() + j * dim;
        double sc = 0, ss = 0, sc2 = 0, ss2 = 0;
        for (std::size_t p = 0; p < n; ++p) {
            const double* x = samples.data() + p * dim;
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += lam[d] * x[d];
            const double c = std::cos(dot), s = std::sin(dot);
            sc += c;
            ss += s;
            sc2 += c * c;
            ss2 += s * s;
        }
        out.push_back(from_parts(sc, ss, sc2, ss2, n));
    }
    return out;
}

} // namespace hypoheat::stats
