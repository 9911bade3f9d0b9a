#include "doctest.h"

#include <cmath>
#include <numeric>

#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/group_integrator.hpp"
#include "hypoheat/sde/heun.hpp"
#include "hypoheat/sde/lamperti.hpp"
#include "hypoheat/sde/line_integral.hpp"
#include "hypoheat/sde/radial.hpp"
#include "hypoheat/sde/skew_product.hpp"
#include "hypoheat/stats/tests.hpp"

using namespace hypoheat;

TEST_CASE("brownian ensemble moments and seed determinism") {
    sde::TimeGrid grid(2.0, 256);
    auto e = sde::brownian_ensemble(2, grid, 20000, 123);
    double var = 0.0, cov = 0.0, qv = 0.0;
    for (std::size_t p = 0; p < e.n_paths; ++p) {
        const double x = e.at(p, 256, 0), y = e.at(p, 256, 1);
        var += x * x;
        cov += x * y;
    }
    var /= e.n_paths;
    cov /= e.n_paths;
    CHECK(var == doctest::Approx(2.0).epsilon(4.0 / std::sqrt(20000.0) / 2.0 * 3));
    CHECK(std::abs(cov) < 3.0 * 2.0 * std::sqrt(2.0 / 20000.0));
    // quadratic variation of one path
    for (std::size_t p = 0; p < 50; ++p) {
        qv = 0.0;
        for (int i = 0; i < 256; ++i) {
            const double d = e.at(p, i + 1, 0) - e.at(p, i, 0);
            qv += d * d;
        }
        CHECK(qv == doctest::Approx(2.0).epsilon(3.0 * std::sqrt(2.0 / 256.0) * 1.5));
    }
    // bit-identical across worker counts
    for (int workers : {1, 4, 16}) {
        sde::set_worker_count(workers);
        auto e2 = sde::brownian_ensemble(2, grid, 500, 123);
        for (std::size_t i = 0; i < e2.data.size(); ++i) CHECK(e2.data[i] == e.data[i]);
    }
    sde::set_worker_count(0);
}

TEST_CASE("heun step: ODE limit and stratonovich correction") {
    // dx = x dt, x(1) = e
    double x = 1.0;
    const int n = 10000;
    sde::Rng rng(1, 0);
    for (int i = 0; i < n; ++i)
        x = sde::heun_step(x, 1.0 / n, 0.0, [](double v) { return v; },
                           [](double) { return 0.0; });
    CHECK(x == doctest::Approx(std::exp(1.0)).epsilon(1e-4));
    // dX = X o dB: E[log X(1)] = 0; Ito dX = X dB: E[X(1)] = 1 vs Strat e^{1/2}
    const int paths = 20000, steps = 512;
    double mean_log = 0.0, mean_strat = 0.0, mean_ito = 0.0, m2s = 0.0;
    sde::parallel_over_paths(paths, 99, [&](std::size_t, sde::Rng& r) {
        double xs = 1.0, xi = 1.0;
        for (int i = 0; i < steps; ++i) {
            const double db = r.normal() / std::sqrt(static_cast<double>(steps));
            xs = sde::heun_step(xs, 1.0 / steps, db, [](double) { return 0.0; },
                                [](double v) { return v; });
            xi += xi * db;
        }
        static std::mutex mtx;
        std::lock_guard<std::mutex> lk(mtx);
        mean_log += std::log(std::abs(xs));
        mean_strat += xs;
        m2s += xs * xs;
        mean_ito += xi;
    });
    mean_log /= paths;
    mean_strat /= paths;
    mean_ito /= paths;
    CHECK(std::abs(mean_log) < 3.0 / std::sqrt(static_cast<double>(paths)));
    const double se = std::sqrt((m2s / paths - mean_strat * mean_strat) / paths);
    CHECK(std::abs(mean_strat / mean_ito - std::exp(0.5)) < 3.0 * se);
}

TEST_CASE("group integrator certificates") {
    // unitarity drift after 1e4 steps at step 1e-3
    auto basis = sde::un_basis(3, sde::UnConvention::HalfTrace);
    sde::Rng rng(7, 0);
    sde::GroupPath path(alg::CMatrix::Identity(3, 3));
    for (int i = 0; i < 10000; ++i) path.step(sde::lie_increment(basis, 1e-3, rng));
    CHECK(alg::unitary_defect(path.value()) < 1e-8);
    // pseudo-unitary invariant on U(2,1)
    auto pbasis = sde::unkk_basis(3, 1);
    alg::RVector eta(3);
    eta << 1, 1, -1;
    sde::GroupPath ppath(alg::CMatrix::Identity(3, 3));
    ppath.set_pseudo(eta);
    for (int i = 0; i < 10000; ++i) ppath.step(sde::lie_increment(pbasis, 1e-3, rng));
    CHECK(alg::pseudo_unitary_defect(ppath.value(), eta) < 1e-8);
    // basis elements live in the right algebra
    for (const auto& a : pbasis)
        CHECK((a.adjoint() * eta.cast<alg::Complex>().asDiagonal() +
               eta.cast<alg::Complex>().asDiagonal() * a)
                  .norm() < 1e-14);
}

TEST_CASE("line integral") {
    // exact one-form df, f = |x|^2 along a random path
    sde::Rng rng(11, 0);
    const std::size_t nodes = 10000, dim = 2;
    std::vector<double> path(nodes * dim, 0.0);
    for (std::size_t i = 1; i < nodes; ++i)
        for (std::size_t d = 0; d < dim; ++d)
            path[i * dim + d] = path[(i - 1) * dim + d] + 0.01 * rng.normal();
    auto df = [](std::span<const double> x, std::span<double> a) {
        a[0] = 2.0 * x[0];
        a[1] = 2.0 * x[1];
    };
    auto vals = sde::line_integral(df, path, dim);
    const double fend = path[(nodes - 1) * dim] * path[(nodes - 1) * dim] +
                        path[(nodes - 1) * dim + 1] * path[(nodes - 1) * dim + 1];
    CHECK(vals.back() == doctest::Approx(fend).epsilon(1e-6));
    // deterministic circle loop against the winding form
    const int m = 4000;
    std::vector<double> circle((m + 1) * 2);
    for (int i = 0; i <= m; ++i) {
        circle[2 * i] = std::cos(2.0 * M_PI * i / m);
        circle[2 * i + 1] = std::sin(2.0 * M_PI * i / m);
    }
    auto eta_form = [](std::span<const double> x, std::span<double> a) {
        const double r2 = x[0] * x[0] + x[1] * x[1];
        a[0] = -x[1] / r2;
        a[1] = x[0] / r2;
    };
    CHECK(sde::line_integral(eta_form, circle, 2).back() ==
          doctest::Approx(2.0 * M_PI).epsilon(1e-6));
}

TEST_CASE("radial diffusions") {
    // Bessel(3) from 1: E[R(t)^2] = 1 + 3t
    sde::RadialDiffusionSpec bessel3{[](double r) { return 1.0 / r; }, 0.0,
                                     std::numeric_limits<double>::infinity(), true, false};
    sde::TimeGrid grid(1.0, 512);
    const std::size_t paths = 20000;
    std::vector<double> r2(paths);
    sde::parallel_over_paths(paths, 5, [&](std::size_t p, sde::Rng& rng) {
        std::vector<double> out(grid.steps() + 1);
        sde::radial_path(bessel3, 1.0, grid, rng, out.data());
        r2[p] = out.back() * out.back();
    });
    double mean = std::accumulate(r2.begin(), r2.end(), 0.0) / paths;
    double var = 0.0;
    for (double v : r2) var += (v - mean) * (v - mean);
    const double se = std::sqrt(var / paths / paths);
    CHECK(std::abs(mean - 4.0) < 3.0 * se);
    // circular Jacobi (0,0) stays in (0, pi/2)
    sde::RadialDiffusionSpec jac{[](double r) { return 1.0 / std::tan(2.0 * r); }, 0.0,
                                 M_PI_2, true, true};
    int exits = 0;
    sde::parallel_over_paths(10000, 6, [&](std::size_t, sde::Rng& rng) {
        std::vector<double> out(grid.steps() + 1);
        sde::radial_path(jac, 0.7, grid, rng, out.data());
        for (double v : out)
            if (v <= 0.0 || v >= M_PI_2) ++exits;
    });
    CHECK(exits == 0);
}

TEST_CASE("skew product basics") {
    sde::TimeGrid grid(1.0, 512);
    // f == 0 keeps the fiber constant
    sde::SkewProductSpec zero;
    zero.radial = {[](double r) { return 1.0 / r; }, 0.0,
                   std::numeric_limits<double>::infinity(), true, false};
    zero.r0 = 1.0;
    zero.clock = [](double) { return 0.0; };
    zero.fiber = sde::FiberKind::Scalar;
    auto e0 = sde::skew_product(zero, grid, 200, 3);
    for (std::size_t p = 0; p < e0.n_paths; ++p) CHECK(e0.at(p, 0, 2) == 0.0);
    // f == 1: fiber is standard BM; KS vs N(0,t)
    zero.clock = [](double) { return 1.0; };
    zero.tag = "identity_clock";
    auto e1 = sde::skew_product(zero, grid, 10000, 4);
    std::vector<double> s(e1.n_paths);
    for (std::size_t p = 0; p < e1.n_paths; ++p) s[p] = e1.at(p, 0, 2);
    auto rep = stats::ks_test(
        s, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }, 0.02,
        "identity_clock_gaussian");
    CHECK(rep.pass);
    // S7 fiber stays on the sphere
    sde::SkewProductSpec s7;
    s7.radial = zero.radial;
    s7.r0 = 1.0;
    s7.clock = [](double r) { return 1.0 / (r * r); };
    s7.fiber = sde::FiberKind::S7Sphere;
    auto e2 = sde::skew_product(s7, grid, 100, 5);
    for (std::size_t p = 0; p < e2.n_paths; ++p) {
        double n2 = 0.0;
        for (int j = 0; j < 8; ++j) n2 += e2.at(p, 0, 2 + j) * e2.at(p, 0, 2 + j);
        CHECK(std::abs(std::sqrt(n2) - 1.0) < 1e-8);
    }
    // first-passage sampler sanity: P(T_1 <= 1) for |BM| = 2(1 - Phi(1))
    sde::Rng rng(9, 0);
    int hit = 0;
    const int trials = 200000;
    for (int i = 0; i < trials; ++i)
        if (sde::first_passage_time(1.0, 0.0, rng) <= 1.0) ++hit;
    const double p_ref = std::erfc(1.0 / std::sqrt(2.0));
    CHECK(static_cast<double>(hit) / trials == doctest::Approx(p_ref).epsilon(0.02));
}
