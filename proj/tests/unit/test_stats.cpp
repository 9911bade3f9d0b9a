#include "doctest.h"

#include <cmath>

#include "hypoheat/sde/rng.hpp"
#include "hypoheat/stats/ecf.hpp"
#include "hypoheat/stats/gil_pelaez.hpp"
#include "hypoheat/stats/laws.hpp"
#include "hypoheat/stats/report.hpp"
#include "hypoheat/stats/tests.hpp"

using namespace hypoheat;

TEST_CASE("empirical CF") {
    std::vector<double> c(200, 0.7);
    auto e = stats::empirical_cf(c, std::vector<double>{1.3});
    CHECK(e[0].value.real() == doctest::Approx(std::cos(1.3 * 0.7)));
    CHECK(e[0].value.imag() == doctest::Approx(std::sin(1.3 * 0.7)));
    CHECK(e[0].se_re == doctest::Approx(0.0));
    sde::Rng rng(1, 0);
    std::vector<double> g(100000);
    for (auto& v : g) v = rng.normal();
    auto eg = stats::empirical_cf(g, std::vector<double>{1.0});
    CHECK(std::abs(eg[0].value.real() - std::exp(-0.5)) < 3.0 * eg[0].se_re);
    auto law = stats::reference_law(stats::cauchy_law(1.0));
    std::vector<double> cs(100000);
    for (auto& v : cs) v = law.sample(rng);
    auto ec = stats::empirical_cf(cs, std::vector<double>{1.0});
    CHECK(std::abs(ec[0].value.real() - std::exp(-1.0)) < 3.0 * ec[0].se_re);
    CHECK_THROWS(stats::empirical_cf(std::vector<double>(10, 0.0), std::vector<double>{1.0}));
}

TEST_CASE("gil-pelaez inversion round trips") {
    auto cfg = [](double l) { return std::exp(-0.5 * l * l); };
    double maxerr = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.25)
        maxerr = std::max(maxerr,
                          std::abs(stats::gil_pelaez_cdf(cfg, x).value - stats::normal_cdf(x)));
    CHECK(maxerr < 1e-6);
    auto cfc = [](double l) { return std::exp(-1.5 * std::abs(l)); };
    for (double x : {-2.0, 0.0, 0.7, 3.0})
        CHECK(stats::gil_pelaez_cdf(cfc, x).value ==
              doctest::Approx(0.5 + std::atan(x / 1.5) / M_PI).epsilon(1e-8));
    CHECK(stats::gil_pelaez_cdf(cfg, 0.0).value == doctest::Approx(0.5));
}

TEST_CASE("ks machinery") {
    sde::Rng rng(5, 0);
    // self-consistency calibration: >= 95/100 seeded repeats pass at alpha 0.01
    int pass = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> s(1000);
        sde::Rng r2(100 + rep, 0);
        for (auto& v : s) v = r2.normal();
        const double d = stats::ks_statistic(s, [](double x) { return stats::normal_cdf(x); });
        if (stats::ks_p_value(d, 1000.0) > 0.01) ++pass;
    }
    CHECK(pass >= 95);
    // power probe: shifted reference fails decisively
    std::vector<double> s(4000);
    for (auto& v : s) v = rng.normal();
    const double d = stats::ks_statistic(s, [](double x) { return stats::normal_cdf(x - 1.0); });
    CHECK(d > 5.0 * 0.03);
    // two-sample on identical ensembles with different seeds passes
    std::vector<double> a(4000), b(4000);
    sde::Rng ra(7, 0), rb(8, 0);
    for (auto& v : a) v = ra.normal();
    for (auto& v : b) v = rb.normal();
    CHECK(stats::two_sample_ks_statistic(a, b) < 0.035);
}

TEST_CASE("reference laws") {
    sde::Rng rng(9, 0);
    auto ht = stats::reference_law(stats::hitting_time_law(2.0));
    // density integrates to 1: CDF at infinity
    CHECK(ht.cdf(1e10) == doctest::Approx(std::erfc(2.0 / std::sqrt(2e10))).epsilon(1e-10));
    CHECK(ht.cdf(1e14) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(ht.cdf(4.0) == doctest::Approx(std::erfc(2.0 / std::sqrt(8.0))));
    // sampler consistency
    std::vector<double> s(40000);
    for (auto& v : s) v = ht.sample(rng);
    CHECK(stats::ks_test(s, ht.cdf, 0.012, "ht").pass);
    // beta product Mellin moments at s=2,4
    auto bp = stats::reference_law(stats::beta_product_law(2, 2));
    double m2 = 0, m4 = 0;
    const int n = 60000;
    for (int i = 0; i < n; ++i) {
        const double v = bp.sample(rng);
        m2 += v * v;
        m4 += v * v * v * v;
    }
    m2 /= n;
    m4 /= n;
    CHECK(m2 == doctest::Approx(stats::beta_product_mellin(2, 2, 2.0)).epsilon(0.02));
    CHECK(m4 == doctest::Approx(stats::beta_product_mellin(2, 2, 4.0)).epsilon(0.03));
    // isotropic Cauchy CF value
    auto ic = stats::reference_law(stats::isotropic_cauchy_law(7, 4.0));
    CHECK(ic.cf(1.0) == doctest::Approx(std::exp(-4.0)));
    // relativistic Cauchy CDF symmetric at 0
    auto rc = stats::reference_law(stats::relativistic_cauchy_law(1.5));
    CHECK(rc.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-8));
    // radial reductions normalize
    auto icr = stats::reference_law_radial(stats::isotropic_cauchy_law(7, 4.0));
    CHECK(icr.cdf(1e9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(icr.cdf(8.0) > 0.3);
    auto gr = stats::reference_law_radial(stats::gaussian_law(0.0, 2.0, 3));
    CHECK(gr.cdf(1e9) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(gr.cdf(2.0) > 0.2);
}

TEST_CASE("chi2 and report plumbing") {
    sde::Rng rng(11, 0);
    std::vector<double> s(20000);
    for (auto& v : s) v = rng.uniform();
    auto rep = stats::chi2_density_test(s, [](double) { return 1.0; }, 0.0, 1.0, 20, 0.01,
                                        "uniform");
    CHECK(rep.pass);
    CHECK(rep.to_json().find("uniform") != std::string::npos);
    std::vector<stats::TestReport> rs{rep};
    const auto j = stats::reports_to_json("suite", rs, 7, 0.0);
    CHECK(j.find("\"all_pass\": true") != std::string::npos);
}
