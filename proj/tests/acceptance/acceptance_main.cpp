// Acceptance suite: one function per criterion, each printing [PASS]/[FAIL]
// lines per check. Run with no argument for all criteria, or with 1..11 to
// run a single one. Exit code 0 iff every executed check passed.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hypoheat/fibration/area_cf.hpp"
#include "hypoheat/fibration/kernels.hpp"
#include "hypoheat/fibration/models.hpp"
#include "hypoheat/flat/area_cf.hpp"
#include "hypoheat/flat/densities.hpp"
#include "hypoheat/flat/models.hpp"
#include "hypoheat/matrix/grassmann.hpp"
#include "hypoheat/matrix/unitary.hpp"
#include "hypoheat/sde/lamperti.hpp"
#include "hypoheat/special/circular_jacobi.hpp"
#include "hypoheat/special/hyperbolic_kernel.hpp"
#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/special/sphere_kernel.hpp"
#include "hypoheat/special/su2_kernel.hpp"
#include "hypoheat/stats/ecf.hpp"
#include "hypoheat/stats/gil_pelaez.hpp"
#include "hypoheat/stats/laws.hpp"
#include "hypoheat/stats/tests.hpp"
#include "hypoheat/winding/models.hpp"

using namespace hypoheat;

namespace {

int g_fail = 0;

// fiber variance constants of the det-winding decomposition, pinned by the
// CF-matching measurement against the matrix engine (see the unit suite)
// Var(Im tr D_t) = 2kt: the U(k) fiber of the Stiefel submersion carries the
// metric (1/2) tr(theta* theta) (minimal-norm lift), measured c^2 = 2.03 by CF
// matching against the matrix engine. The hyperbolic winding limit is then
// N(0, 3k) = fiber 2k plus clock k; the stated N(0,2k) reference is kept as
// the faithful check with the corrected one alongside (README errata notes).
constexpr double KFiberVar2 = 2.0;
constexpr double KHypWindVar = 2.0;  // as stated
constexpr double KHypWindVarCorrected = 3.0;
std::chrono::steady_clock::time_point g_t0;

void begin(int crit, const char* title) {
    std::printf("== criterion %d: %s ==\n", crit, title);
    g_t0 = std::chrono::steady_clock::now();
}

void finish() {
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0).count();
    std::printf("   (%.1f s)\n", s);
}

void check(bool pass, const std::string& name, double stat, double thresh) {
    std::printf("[%s] %s  statistic=%.6g threshold=%.6g\n", pass ? "PASS" : "FAIL",
                name.c_str(), stat, thresh);
    if (!pass) ++g_fail;
}

void check_le(const std::string& name, double stat, double thresh) {
    check(stat <= thresh, name, stat, thresh);
}

struct MeanSe {
    double mean = 0.0, se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
    MeanSe out;
    out.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double var = 0.0;
    for (double x : v) var += (x - out.mean) * (x - out.mean);
    out.se = std::sqrt(var / v.size() / v.size());
    return out;
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    begin(1, "Levy area CF, complex Heisenberg n=1,2");
    sde::TimeGrid grid(1.0, 1 << 12);
    for (int n : {1, 2}) {
        auto model = flat::FlatModel::complex_heisenberg(n);
        auto e = flat::simulate_flat_area(model, grid, 100000, 1000 + n);
        std::vector<double> s(e.n_paths);
        for (std::size_t p = 0; p < e.n_paths; ++p) s[p] = e.at(p, 0, 2 * n);
        auto ecf = stats::empirical_cf(s, std::vector<double>{0.5, 1.0, 2.0});
        const double lams[3] = {0.5, 1.0, 2.0};
        for (int i = 0; i < 3; ++i) {
            const double ref = std::pow(1.0 / std::cosh(lams[i]), n);
            const double z = std::abs(ecf[i].value.real() - ref) / ecf[i].se_re;
            check_le("heisenberg(" + std::to_string(n) + ") lambda=" +
                         std::to_string(lams[i]) + " |ECF-CF|/SE",
                     z, 3.0);
        }
    }
    finish();
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    begin(2, "general skew-symmetric CF, random 4x4");
    sde::Rng seeder(2024, 0);
    alg::RMatrix b(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b(i, j) = seeder.normal();
    alg::RMatrix a = 0.5 * (b - b.transpose());
    auto model = flat::FlatModel::skew_quadratic(a);
    sde::TimeGrid grid(1.0, 1 << 12);
    auto e = flat::simulate_flat_area(model, grid, 80000, 2027);
    std::vector<double> s(e.n_paths);
    for (std::size_t p = 0; p < e.n_paths; ++p) s[p] = e.at(p, 0, 4);
    auto ecf = stats::empirical_cf(s, std::vector<double>{0.7, 1.3});
    for (double lam : {0.7, 1.3}) {
        const double ref = flat::general_skew_cf((lam * a).eval(), 1.0);
        const auto& pt = lam == 0.7 ? ecf[0] : ecf[1];
        check_le("skew4 lambda=" + std::to_string(lam) + " |ECF-CF|/SE",
                 std::abs(pt.value.real() - ref) / pt.se_re, 3.0);
    }
    finish();
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    begin(3, "quaternionic area density");
    for (double r : {0.4, 0.8, 1.2, 1.8, 2.6}) {
        auto cf = [](double l) { return std::pow(1.0 / std::cosh(l), 2.0); };
        const double inv = stats::radial_fourier_density(cf, 3, r).value;
        check_le("density vs inversion at |phi|=" + std::to_string(r),
                 std::abs(flat::quat_area_density(1, 1.0, r) - inv), 1e-5);
    }
    // MC histogram chi^2 of |S(1)| against the radial density
    auto model = flat::FlatModel::quaternionic_heisenberg(1);
    sde::TimeGrid grid(1.0, 1 << 11);
    auto e = flat::simulate_flat_area(model, grid, 40000, 303);
    std::vector<double> radii(e.n_paths);
    for (std::size_t p = 0; p < e.n_paths; ++p) {
        double n2 = 0.0;
        for (int j = 0; j < 3; ++j) n2 += e.at(p, 0, 4 + j) * e.at(p, 0, 4 + j);
        radii[p] = std::sqrt(n2);
    }
    auto rep = stats::chi2_density_test(
        radii,
        [](double r) { return flat::quat_area_density(1, 1.0, r) * 4.0 * M_PI * r * r; },
        0.0, 6.0, 24, 0.01, "quat_density_chi2");
    check(rep.pass, "MC histogram chi2 p-value", rep.statistic, rep.threshold);
    finish();
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    begin(4, "kernel identity suite");
    // (a) sphere Gegenbauer vs Millson
    for (int d : {3, 5, 7})
        check_le("sphere d=" + std::to_string(d) + " series vs theta",
                 std::abs(sfn::sphere_kernel_series(d, 0.4, 1.1).require() /
                              sfn::sphere_kernel_theta(d, 0.4, 1.1) -
                          1.0),
                 1e-6);
    // (b) hyperbolic Millson vs Gruet
    for (int d : {4, 5})
        check_le("hyperbolic d=" + std::to_string(d) + " millson vs gruet",
                 std::abs(sfn::hyperbolic_kernel(d, 0.8, 1.2) /
                              sfn::hyperbolic_kernel(d, 0.8, 1.2,
                                                     sfn::HyperbolicMethod::Gruet) -
                          1.0),
                 1e-6);
    // (c) Hopf spectral vs integral (n=1, t=0.5)
    auto ch = fib::make_fibration(fib::FibrationModel::Kind::CHopf, 1);
    check_le("chopf spectral vs integral",
             std::abs(fib::horizontal_kernel(ch, fib::KernelForm::Spectral, 0.5, 0.6, 0.8) /
                          fib::horizontal_kernel(ch, fib::KernelForm::Integral, 0.5, 0.6,
                                                 0.8) -
                      1.0),
             1e-6);
    // (d) the cross-fibration relations
    auto r1 = fib::kernel_relation_check(fib::KernelRelation::QcSphere, 1, 0.4, 0.5, 0.7, 1e-5);
    check(r1.pass, r1.name, r1.statistic, r1.threshold);
    auto r2 = fib::kernel_relation_check(fib::KernelRelation::TwistorCompact, 1, 0.4, 0.5,
                                         0.6, 1e-5);
    check(r2.pass, r2.name, r2.statistic, r2.threshold);
    // (e) normalizations against the Appendix-style radial measures
    auto mass1 = sfn::integrate(
        [&](double r) { return sfn::circular_jacobi_kernel0(1, 0, 0.5, r).require(); },
        1e-10, M_PI_2 - 1e-10, 1e-11);
    check_le("circular jacobi mass", std::abs(mass1.value - 1.0), 1e-5);
    auto mass2 = sfn::integrate(
        [&](double r) {
            return sfn::sphere_kernel_theta(3, 0.4, r) * sfn::sphere_radial_measure(3, r);
        },
        0.0, M_PI, 1e-11);
    check_le("sphere S^3 mass", std::abs(mass2.value - 1.0), 1e-5);
    auto mass3 = sfn::integrate(
        [&](double r) {
            return sfn::hyperbolic_kernel(3, 1.0, r) * sfn::hyperbolic_radial_measure(3, r);
        },
        0.0, 16.0, 1e-11);
    check_le("hyperbolic H^3 mass", std::abs(mass3.value - 1.0), 1e-5);
    auto mass4 = sfn::integrate(
        [&](double r) { return sfn::ch_kernel(2, 0.5, r) * sfn::ch_radial_measure(2, r); },
        0.0, 12.0, 1e-10);
    check_le("CH^2 mass", std::abs(mass4.value - 1.0), 1e-5);
    auto mass5 = sfn::integrate(
        [&](double r) { return sfn::hh_kernel(2, 0.5, r) * sfn::hh_radial_measure(2, r); },
        0.0, 12.0, 1e-10);
    check_le("HH^2 mass", std::abs(mass5.value - 1.0), 1e-5);
    // fibration kernels on tensor grids
    auto tensor_norm = [&](const fib::FibrationModel& m, double t, double rmax, int nr,
                           int nf, fib::KernelForm form) {
        const auto& gr = sfn::gauss_legendre(nr);
        const auto& gf = sfn::gauss_legendre(nf);
        double total = 0;
        for (auto [xr, wr] : gr) {
            const double r = 0.5 * rmax * (xr + 1.0);
            double inner = 0;
            for (auto [xf, wf] : gf) {
                const double th = m.fiber_dim() == 1 ? M_PI * xf : M_PI_2 * (xf + 1.0);
                inner += wf * fib::horizontal_kernel(m, form, t, r, th) *
                         fib::cylindrical_measure(m, r, th);
            }
            inner *= m.fiber_dim() == 1 ? M_PI : M_PI_2;
            total += wr * inner * 0.5 * rmax;
        }
        return total;
    };
    check_le("chopf(1) mass",
             std::abs(tensor_norm(ch, 0.5, M_PI_2, 50, 40, fib::KernelForm::Spectral) - 1.0),
             1e-5);
    auto qh = fib::make_fibration(fib::FibrationModel::Kind::QHopf, 1);
    check_le("qhopf(1) mass",
             std::abs(tensor_norm(qh, 0.5, M_PI_2, 50, 40, fib::KernelForm::Spectral) - 1.0),
             1e-5);
    auto oh = fib::make_fibration(fib::FibrationModel::Kind::OHopf, 1);
    check_le("ohopf mass",
             std::abs(tensor_norm(oh, 0.5, M_PI_2, 50, 40, fib::KernelForm::Spectral) - 1.0),
             1e-5);
    auto ca = fib::make_fibration(fib::FibrationModel::Kind::CAdS, 1);
    check_le("cads(1) mass",
             std::abs(tensor_norm(ca, 0.5, 10.0, 80, 40, fib::KernelForm::Integral) - 1.0),
             1e-5);
    auto qa = fib::make_fibration(fib::FibrationModel::Kind::QAdS, 1);
    check_le("qads(1) mass",
             std::abs(tensor_norm(qa, 0.5, 11.0, 90, 40, fib::KernelForm::Integral) - 1.0),
             1e-5);
    auto oa = fib::make_fibration(fib::FibrationModel::Kind::OAdS, 1);
    check_le("oads mass",
             std::abs(tensor_norm(oa, 0.5, 18.0, 130, 44, fib::KernelForm::Integral) - 1.0),
             1e-5);
    finish();
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    begin(5, "area-CF Girsanov ratios vs MC");
    const double t = 0.5;
    auto run = [&](fib::FibrationModel::Kind kind, int n, const char* nm) {
        auto model = fib::make_fibration(kind, n);
        auto ens = fib::simulate_fibration_exact(model, {t}, 100000, 505);
        for (double lam : {0.8, 1.5}) {
            // E[e^{i lam . a(t)}] = E[e^{-lam^2 A_t/2}] evaluated on the exact
            // clock samples (lower variance than the fiber ECF)
            std::vector<double> v(ens.n_paths);
            for (std::size_t p = 0; p < ens.n_paths; ++p)
                v[p] = std::exp(-0.5 * lam * lam * ens.at(p, 0, 1));
            auto ms = mean_se(v);
            const double ref = fib::area_cf_marginal(model, lam, t);
            check_le(std::string(nm) + " lambda=" + std::to_string(lam) + " |MC-CF|/SE",
                     std::abs(ms.mean - ref) / ms.se, 3.0);
        }
    };
    run(fib::FibrationModel::Kind::CHopf, 1, "chopf(1)");
    run(fib::FibrationModel::Kind::CAdS, 1, "cads(1)");
    run(fib::FibrationModel::Kind::QHopf, 1, "qhopf(1)");
    run(fib::FibrationModel::Kind::QAdS, 1, "qads(1)");
    run(fib::FibrationModel::Kind::OHopf, 1, "ohopf");
    finish();
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    begin(6, "fibration limit-theorem ladder");
    auto ladder = [&](fib::FibrationModel::Kind kind, int n, double tfin, double thresh,
                      bool radial_reduction, const char* nm) {
        auto model = fib::make_fibration(kind, n);
        auto lim = fib::limit_law(model);
        const std::vector<double> ts{tfin / 4.0, tfin / 2.0, tfin};
        auto ens = fib::simulate_fibration_exact(model, ts, 5000, 606);
        auto fv = fib::fiber_from_clock(ens, model.fiber_dim(), 606);
        std::vector<double> ks(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k) {
            std::vector<double> sc(ens.n_paths);
            if (!radial_reduction) {
                for (std::size_t p = 0; p < ens.n_paths; ++p)
                    sc[p] = fv[(p * ts.size() + k) * model.fiber_dim()] * lim.scaling(ts[k]);
                auto ref = stats::reference_law(lim.law);
                ks[k] = stats::ks_statistic(sc, ref.cdf);
            } else {
                for (std::size_t p = 0; p < ens.n_paths; ++p) {
                    double n2 = 0.0;
                    for (int j = 0; j < model.fiber_dim(); ++j) {
                        const double x = fv[(p * ts.size() + k) * model.fiber_dim() + j];
                        n2 += x * x;
                    }
                    sc[p] = std::sqrt(n2) * lim.scaling(ts[k]);
                }
                auto ref = stats::reference_law_radial(lim.law);
                ks[k] = stats::ks_statistic(sc, ref.cdf);
            }
        }
        const bool monotone = ks[1] < ks[0] && ks[2] < ks[1];
        check(monotone, std::string(nm) + " monotone KS improvement",
              ks[2] / std::max(ks[0], 1e-12), 1.0);
        check_le(std::string(nm) + " final KS", ks.back(), thresh);
    };
    ladder(fib::FibrationModel::Kind::CHopf, 1, 30.0, 0.05, false, "chopf(1) vs Cauchy(1)");
    ladder(fib::FibrationModel::Kind::CHopf, 2, 30.0, 0.05, false, "chopf(2) vs Cauchy(2)");
    ladder(fib::FibrationModel::Kind::CAdS, 1, 40.0, 0.03, false, "cads(1) vs N(0,1)");
    ladder(fib::FibrationModel::Kind::QHopf, 1, 30.0, 0.05, false, "qhopf(1) vs N(0,2n)");
    ladder(fib::FibrationModel::Kind::QAdS, 1, 40.0, 0.05, false, "qads(1) vs N(0,1)");
    ladder(fib::FibrationModel::Kind::OAdS, 1, 40.0, 0.05, false, "oads vs N(0,1)");
    // OHopf as stated: radial norm of a(t)/sqrt(t) against IsotropicCauchy(7,4).
    // The clock average under Jacobi(3,3) is 4/3, so the limit is Gaussian;
    // the stated reference cannot match (see the README errata notes). The
    // check is implemented faithfully and reported as measured, with the
    // corrected Gaussian reference verified alongside.
    {
        auto model = fib::make_fibration(fib::FibrationModel::Kind::OHopf, 1);
        const std::vector<double> ts{10.0, 20.0, 40.0};
        auto ens = fib::simulate_fibration_exact(model, ts, 5000, 607);
        auto fv = fib::fiber_from_clock(ens, 7, 607);
        auto stated = stats::reference_law_radial(stats::isotropic_cauchy_law(7, 4.0));
        auto corrected = stats::reference_law_radial(stats::gaussian_law(0.0, 4.0 / 3.0, 7));
        std::vector<double> ks_stated(ts.size()), ks_corr(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k) {
            std::vector<double> sc(ens.n_paths);
            for (std::size_t p = 0; p < ens.n_paths; ++p) {
                double n2 = 0.0;
                for (int j = 0; j < 7; ++j) {
                    const double x = fv[(p * ts.size() + k) * 7 + j];
                    n2 += x * x;
                }
                sc[p] = std::sqrt(n2 / ts[k]);
            }
            ks_stated[k] = stats::ks_statistic(sc, stated.cdf);
            ks_corr[k] = stats::ks_statistic(sc, corrected.cdf);
        }
        check(ks_stated[1] < ks_stated[0] && ks_stated[2] < ks_stated[1],
              "ohopf radial vs IsotropicCauchy(7,4): monotone KS",
              ks_stated[2] / std::max(ks_stated[0], 1e-12), 1.0);
        check_le("ohopf radial vs IsotropicCauchy(7,4): final KS (as stated)",
                 ks_stated.back(), 0.05);
        check_le("ohopf radial vs N(0,(4/3)I7): final KS (corrected reference)",
                 ks_corr.back(), 0.05);
    }
    finish();
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    begin(7, "Spitzer suite");
    {
        auto model = wind::make_winding_model(wind::WindingModel::Kind::Plane, 1.0);
        const std::vector<double> ts{100.0, 1000.0, 10000.0};
        auto ens = wind::simulate_winding_exact(model, ts, 5000, 707);
        auto fv = wind::fiber_from_clock(ens, 1, 707);
        auto ref = stats::reference_law(stats::cauchy_law(1.0));
        std::vector<double> ks(3);
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<double> sc(ens.n_paths);
            for (std::size_t p = 0; p < ens.n_paths; ++p)
                sc[p] = 2.0 * fv[p * 3 + k] / std::log(ts[k]);
            ks[k] = stats::ks_statistic(sc, ref.cdf);
        }
        check(ks[1] < ks[0] && ks[2] < ks[1], "planar 2z/lnT vs Cauchy(1): monotone KS",
              ks[2] / ks[0], 1.0);
        check_le("planar final KS at T=1e4", ks[2], 0.1);
    }
    {
        auto model = wind::make_winding_model(wind::WindingModel::Kind::Quaternionic, 1.0);
        auto ens = wind::simulate_winding_exact(model, {10000.0}, 5000, 708);
        auto fv = wind::fiber_from_clock(ens, 3, 708);
        auto stated = stats::reference_law(stats::gaussian_law(0.0, 1.0, 3));
        auto corrected = stats::reference_law(stats::gaussian_law(0.0, 2.0, 3));
        for (int c = 0; c < 3; ++c) {
            std::vector<double> sc(ens.n_paths);
            for (std::size_t p = 0; p < ens.n_paths; ++p)
                sc[p] = 2.0 * fv[p * 3 + c] / std::sqrt(std::log(10000.0));
            // as stated (see README errata notes: the proof's own rescaling is
            // sqrt(2)/sqrt(log t), i.e. componentwise variance 2)
            check_le("quaternionic comp " + std::to_string(c) +
                         " 2z/sqrt(logT) vs N(0,1) (as stated)",
                     stats::ks_statistic(sc, stated.cdf), 0.08);
            check_le("quaternionic comp " + std::to_string(c) +
                         " vs N(0,2) (corrected reference)",
                     stats::ks_statistic(sc, corrected.cdf), 0.08);
        }
    }
    finish();
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    begin(8, "unitary eigenvalue suite");
    // non-collision on 1e4 paths, n = 3
    {
        std::vector<double> l0{-2.0, 0.0, 2.0};
        auto e = mat::unitary_eigen_sde(3, sde::TimeGrid(1.0, 512), 10000, 808, l0);
        double min_gap = 1e9;
        const std::size_t last = e.times.size() - 1;
        for (std::size_t p = 0; p < e.n_paths; ++p)
            min_gap = std::min(min_gap, e.at(p, last, 3));
        check(min_gap > 1e-10, "non-collision min gap (n=3, 1e4 paths)", min_gap, 1e-10);
    }
    // KM density vs MC marginals at n=2, t=0.5
    const int n = 2;
    const double t = 0.5;
    std::vector<double> l0{0.5, 2.0};
    auto e = mat::unitary_eigen_sde(n, sde::TimeGrid(t, 512), 10000, 809, l0);
    const std::size_t last = e.times.size() - 1;
    std::vector<double> lam1(e.n_paths), lam2(e.n_paths);
    for (std::size_t p = 0; p < e.n_paths; ++p) {
        lam1[p] = std::min(e.at(p, last, 0), e.at(p, last, 1));
        lam2[p] = std::max(e.at(p, last, 0), e.at(p, last, 1));
    }
    // marginal CDFs from the 2-D KM density via (u, v) coordinates
    auto cdf_coord = [&](int which) {
        return [&, which](double x) {
            // P(lambda_which <= x): integrate the density over the region
            auto fu = [&](double u) {
                return sfn::integrate(
                           [&](double v) {
                               const double a = 0.5 * (u - v), b = 0.5 * (u + v);
                               const double lo = which == 0 ? std::min(a, b) : std::max(a, b);
                               if (lo > x) return 0.0;
                               std::vector<double> xv{a, b};
                               return 0.5 * mat::unitary_eigen_density(n, t, l0, xv);
                           },
                           1e-9, 2.0 * M_PI - 1e-9, 1e-8)
                    .value;
            };
            return sfn::integrate(fu, 2.5 - 7.0, 2.5 + 7.0, 1e-7).value;
        };
    };
    check_le("KM vs MC: lambda_min KS", stats::ks_statistic(lam1, cdf_coord(0)), 0.03);
    check_le("KM vs MC: lambda_max KS", stats::ks_statistic(lam2, cdf_coord(1)), 0.03);
    // limit density ~ h(x)^2 via the gap at t=8 (chi^2)
    {
        auto e8 = mat::unitary_eigen_sde(2, sde::TimeGrid(8.0, 1024), 8000, 810, l0);
        std::vector<double> v(e8.n_paths);
        const std::size_t l8 = e8.times.size() - 1;
        for (std::size_t p = 0; p < e8.n_paths; ++p)
            v[p] = std::abs(e8.at(p, l8, 1) - e8.at(p, l8, 0));
        auto rep = stats::chi2_density_test(v, mat::unitary_gap_limit_density, 0.0,
                                            2.0 * M_PI, 24, 0.01, "gap chi2");
        check(rep.pass, "limit density chi2 p-value at t=8", rep.statistic, rep.threshold);
    }
    // deterministic rate check: TV of the wrapped alcove density vs the limit
    // at t in {2,4,8}; slope within 30% of -1/(2n) = -1/4
    {
        auto wrapped = [&](double u, double v, double tt) {
            double s = 0.0;
            for (int m = -4; m <= 4; ++m) {
                const double uu = u + 2.0 * M_PI * m;
                std::vector<double> xv{0.5 * (uu - v), 0.5 * (uu + v)};
                s += 0.5 * mat::unitary_eigen_density(n, tt, l0, xv);
            }
            return s;
        };
        std::vector<double> tv;
        for (double tt : {2.0, 4.0, 8.0}) {
            auto fu = [&](double u) {
                return sfn::integrate(
                           [&](double v) {
                               return std::abs(wrapped(u, v, tt) -
                                               mat::unitary_gap_limit_density(v) /
                                                   (2.0 * M_PI));
                           },
                           1e-9, 2.0 * M_PI - 1e-9, 1e-8)
                    .value;
            };
            tv.push_back(0.5 * sfn::integrate(fu, 0.0, 2.0 * M_PI, 1e-7).value);
        }
        const double slope =
            (std::log(tv[2]) - std::log(tv[0])) / 6.0; // over t = 2 -> 8
        check(std::abs(slope + 0.25) <= 0.3 * 0.25,
              "TV rate slope vs -1/(2n)", slope, -0.25);
    }
    finish();
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
    begin(9, "Grassmannian suite");
    sde::TimeGrid grid(0.5, 512);
    const std::size_t paths = 10000;
    // dual construction, compact and hyperbolic (4,2)
    auto dual = [&](bool hyp, std::vector<double> l0, const char* nm) {
        auto gm = mat::make_grassmann(4, 2, hyp, l0);
        auto e1 = mat::eigen_jacobi_sde(gm, grid, paths, 901);
        std::vector<mat::GrassmannRecord> recs(paths);
        mat::grassmann_bm(gm, grid, paths, 902, {512},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              recs[p] = r;
                          });
        for (int c = 0; c < 2; ++c) {
            std::vector<double> a(paths), b(paths);
            for (std::size_t p = 0; p < paths; ++p) {
                a[p] = e1.at(p, 0, c);
                b[p] = recs[p].eigenvalues[c];
            }
            check_le(std::string(nm) + " dual-construction KS (coord " +
                         std::to_string(c) + ")",
                     stats::two_sample_ks_statistic(a, b), 0.02);
        }
    };
    dual(false, {0.3, 1.2}, "compact(4,2)");
    dual(true, {0.2, 0.5}, "hyperbolic(4,2)");
    // km_eigen_density vs MC (rho_1 marginal)
    {
        auto gm = mat::make_grassmann(4, 2, false, {0.3, 1.2});
        auto e1 = mat::eigen_jacobi_sde(gm, sde::TimeGrid(0.4, 512), paths, 903);
        std::vector<double> rho1(paths);
        for (std::size_t p = 0; p < paths; ++p) {
            const double l_hi = e1.at(p, 0, 1);
            rho1[p] = (1.0 - l_hi) / (1.0 + l_hi); // smallest rho
        }
        auto cdf = [&](double x) {
            auto inner = [&](double x1) {
                if (x1 > x) return 0.0;
                return sfn::integrate(
                           [&](double x2) {
                               return mat::km_eigen_density(gm, 0.4, {x1, x2});
                           },
                           x1, 1.0, 1e-8)
                    .value;
            };
            return sfn::integrate(inner, -1.0, std::min(x, 1.0), 1e-7).value;
        };
        check_le("km density vs MC rho_1 KS", stats::ks_statistic(rho1, cdf), 0.03);
    }
    // Selberg-normalized limit chi2 at long time
    {
        auto gm = mat::make_grassmann(4, 2, false, {0.3, 1.2});
        auto e1 = mat::eigen_jacobi_sde(gm, sde::TimeGrid(4.0, 1024), paths, 904);
        std::vector<double> rho1(paths);
        for (std::size_t p = 0; p < paths; ++p) {
            const double l_hi = e1.at(p, 0, 1);
            rho1[p] = (1.0 - l_hi) / (1.0 + l_hi);
        }
        auto marg = [&](double x1) {
            return sfn::integrate(
                       [&](double x2) { return mat::grassmann_limit_density(4, 2, {x1, x2}); },
                       x1, 1.0, 1e-9)
                .value;
        };
        auto rep =
            stats::chi2_density_test(rho1, marg, -1.0, 1.0, 20, 0.01, "selberg chi2");
        check(rep.pass, "Selberg-normalized limit chi2 p-value", rep.statistic,
              rep.threshold);
    }
    // zonal generator check
    {
        auto f = [&](const std::vector<double>& r) {
            return mat::zonal_eigenfunction(4, 2, {0, 2}, r).first;
        };
        double worst = 0.0;
        for (auto pt : {std::vector<double>{-0.4, 0.3}, {-0.7, 0.1}, {0.0, 0.6}}) {
            auto [phi, eig] = mat::zonal_eigenfunction(4, 2, {0, 2}, pt);
            worst = std::max(worst,
                             std::abs(mat::apply_lnk(4, 2, f, pt) - eig * phi) /
                                 std::abs(eig * phi));
        }
        check_le("zonal eigenfunction generator check", worst, 1e-5);
    }
    finish();
}

// --------------------------------------------------------------- criterion 10
void criterion10() {
    begin(10, "trace and winding suite");
    // closed-form trace Laplace vs MC at (3,1), alpha = 0.5, t = 1
    {
        auto g31 = mat::make_grassmann(3, 1, false, {0.4});
        const double alpha = 0.5;
        sde::TimeGrid grid(1.0, 1024);
        const std::size_t paths = 8000;
        std::vector<double> vals(paths);
        mat::grassmann_bm(g31, grid, paths, 1001, {1024},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              vals[p] = std::exp(-2.0 * alpha * alpha * r.int_tr_j);
                          });
        auto ms = mean_se(vals);
        check_le("trace_laplace_compact (3,1) vs MC |diff|/SE",
                 std::abs(ms.mean - mat::trace_laplace_compact(g31, alpha, 1.0)) / ms.se,
                 3.0);
    }
    // k = 1 exact-law engine for the long horizons: int tr J is the clock of
    // the tan^2 radial model with (alpha,beta) = (n-2, 0) (the k = 1 duality
    // verified by the dual-construction checks); first validate the
    // equality in law against the matrix engine at a resolvable horizon.
    auto clock_model = [&](int n) {
        auto m = fib::make_fibration(fib::FibrationModel::Kind::CHopf, n - 1);
        return m;
    };
    {
        auto g31 = mat::make_grassmann(3, 1, false, {1e-4});
        sde::TimeGrid grid(2.0, 1 << 11);
        const std::size_t paths = 6000;
        std::vector<double> trj_matrix(paths);
        mat::grassmann_bm(g31, grid, paths, 1002, {1 << 11},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              trj_matrix[p] = r.int_tr_j;
                          });
        auto ens = fib::simulate_fibration_exact(clock_model(3), {2.0}, paths, 1003);
        std::vector<double> trj_exact(paths);
        for (std::size_t p = 0; p < paths; ++p) trj_exact[p] = ens.at(p, 0, 1);
        check_le("k=1 clock reduction: matrix vs exact engine KS (t=2)",
                 stats::two_sample_ks_statistic(trj_matrix, trj_exact), 0.03);
    }
    // hitting-time limit of t^{-2} int tr J at t = 200, (4,1)
    {
        auto ens = fib::simulate_fibration_exact(clock_model(4), {200.0}, 5000, 1004);
        std::vector<double> x(ens.n_paths);
        for (std::size_t p = 0; p < ens.n_paths; ++p) x[p] = ens.at(p, 0, 1) / (200.0 * 200.0);
        auto ref = stats::reference_law(mat::trace_limit_compact(4, 1));
        check_le("(1/t^2) int tr J vs HittingTime(3) KS at t=200",
                 stats::ks_statistic(x, ref.cdf), 0.1);
    }
    // compact det winding theta(t)/t vs Cauchy(k(n-k)) at (3,1), t = 40
    {
        auto ens = fib::simulate_fibration_exact(clock_model(3), {40.0}, 5000, 1005);
        sde::Rng rng(1006, 0);
        std::vector<double> th(ens.n_paths);
        for (std::size_t p = 0; p < ens.n_paths; ++p) {
            const double fiber_var = KFiberVar2 * 40.0; // Im tr D_t part
            th[p] = (std::sqrt(fiber_var) * rng.normal() +
                     std::sqrt(ens.at(p, 0, 1)) * rng.normal()) /
                    40.0;
        }
        auto ref = stats::reference_law(stats::cauchy_law(2.0));
        check_le("compact det-winding theta/t vs Cauchy(2) KS at t=40",
                 stats::ks_statistic(th, ref.cdf), 0.05);
    }
    // hyperbolic area and winding at (3,1): (1/sqrt t) functионals at t = 30
    {
        auto gh = mat::make_grassmann(3, 1, true, {0.3});
        sde::TimeGrid grid(30.0, 1 << 13);
        const std::size_t paths = 5000;
        std::vector<double> trj(paths), th(paths);
        mat::grassmann_bm(gh, grid, paths, 1007, {1 << 13},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              trj[p] = r.int_tr_j;
                              th[p] = r.det_z_argument;
                          });
        sde::Rng rng(1008, 0);
        std::vector<double> area(paths), wind_s(paths);
        for (std::size_t p = 0; p < paths; ++p) {
            area[p] = std::sqrt(trj[p] / 30.0) * rng.normal();
            wind_s[p] = th[p] / std::sqrt(30.0);
        }
        auto refa = stats::reference_law(stats::gaussian_law(0.0, 1.0));
        check_le("hyperbolic area/sqrt(t) vs N(0,k) KS",
                 stats::ks_statistic(area, refa.cdf), 0.05);
        auto refw = stats::reference_law(stats::gaussian_law(0.0, KHypWindVar));
        check_le("hyperbolic winding/sqrt(t) vs N(0,2k) KS (as stated)",
                 stats::ks_statistic(wind_s, refw.cdf), 0.05);
        auto refw3 = stats::reference_law(stats::gaussian_law(0.0, KHypWindVarCorrected));
        check_le("hyperbolic winding/sqrt(t) vs N(0,3k) KS (corrected reference)",
                 stats::ks_statistic(wind_s, refw3.cdf), 0.05);
    }
    // rho_infty Mellin moments at (4,2): matrix samples at t = 6 vs the
    // Beta-product moment
    {
        auto gm = mat::make_grassmann(4, 2, false, {0.3, 1.2});
        sde::TimeGrid grid(6.0, 1 << 11);
        const std::size_t paths = 6000;
        std::vector<double> r2(paths);
        mat::grassmann_bm(gm, grid, paths, 1009, {1 << 11},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              r2[p] = r.det_z_modulus * r.det_z_modulus;
                          });
        auto ms = mean_se(r2);
        check_le("rho_inf Mellin s=2 |MC-moment|/SE",
                 std::abs(ms.mean - stats::beta_product_mellin(2, 2, 2.0)) / ms.se, 3.0);
    }
    finish();
}

// --------------------------------------------------------------- criterion 11
void criterion11() {
    begin(11, "determinism across worker counts");
    // the calibration-style sampling pipeline must be bit-stable across
    // worker counts; compare full report JSON (the wall-time line is the one
    // legitimately nondeterministic field and is pinned to zero here)
    auto run_once = [&](int workers) {
        sde::set_worker_count(workers);
        std::vector<stats::TestReport> reports;
        auto model = flat::FlatModel::complex_heisenberg(1);
        auto e = flat::simulate_flat_area(model, sde::TimeGrid(1.0, 256), 4000, 1101);
        std::vector<double> s(e.n_paths);
        for (std::size_t p = 0; p < e.n_paths; ++p) s[p] = e.at(p, 0, 2);
        auto ecf = stats::empirical_cf(s, std::vector<double>{1.0});
        stats::TestReport r;
        r.name = "heisenberg_ecf";
        r.statistic = ecf[0].value.real();
        r.threshold = 1.0;
        r.pass = true;
        r.seed = 1101;
        reports.push_back(r);
        auto ens = fib::simulate_fibration_exact(
            fib::make_fibration(fib::FibrationModel::Kind::CHopf, 1), {2.0}, 2000, 1102);
        stats::TestReport r2;
        r2.name = "chopf_clock_mean";
        double m = 0.0;
        for (std::size_t p = 0; p < ens.n_paths; ++p) m += ens.at(p, 0, 1);
        r2.statistic = m / ens.n_paths;
        r2.threshold = 1.0;
        r2.pass = true;
        r2.seed = 1102;
        reports.push_back(r2);
        return stats::reports_to_json("determinism", reports, 1101, 0.0);
    };
    const std::string j1 = run_once(1);
    const std::string j4 = run_once(4);
    const std::string j16 = run_once(16);
    sde::set_worker_count(0);
    check(j1 == j4, "workers 1 vs 4 byte-identical JSON", j1 == j4 ? 0.0 : 1.0, 0.0);
    check(j1 == j16, "workers 1 vs 16 byte-identical JSON", j1 == j16 ? 0.0 : 1.0, 0.0);
    finish();
}

} // namespace

int main(int argc, char** argv) {
    const int which = argc > 1 ? std::atoi(argv[1]) : 0;
    using Fn = void (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8,
                           criterion9, criterion10, criterion11};
    if (which >= 1 && which <= 11) {
        criteria[which - 1]();
    } else {
        for (Fn f : criteria) f();
    }
    if (g_fail) std::printf("%d check(s) failed\n", g_fail);
    return g_fail == 0 ? 0 : 1;
}
