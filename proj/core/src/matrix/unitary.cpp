#include "hypoheat/matrix/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace hypoheat::mat {

void unitary_bm(int n, const sde::TimeGrid& grid, std::size_t n_paths, uint64_t seed,
                sde::UnConvention conv,
                const std::function<void(std::size_t, int, const alg::CMatrix&)>& observe,
                const alg::CMatrix& u0) {
    const auto basis = sde::un_basis(n, conv);
    const alg::CMatrix start = u0.size() == 0 ? alg::CMatrix::Identity(n, n) : u0;
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        sde::GroupPath path(start);
        observe(p, 0, path.value());
        for (int i = 0; i < grid.steps(); ++i) {
            path.step(sde::lie_increment(basis, grid.dt(i), rng));
            observe(p, i + 1, path.value());
        }
    });
}

namespace {

void eigen_drift(const std::vector<double>& l, std::vector<double>& out) {
    const int n = static_cast<int>(l.size());
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            if (p != j) s += 1.0 / std::tan(0.5 * (l[j] - l[p]));
        out[j] = 0.5 * s;
    }
}

double min_gap(const std::vector<double>& l) {
    double g = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(l.size());
    for (int j = 0; j + 1 < n; ++j) g = std::min(g, l[j + 1] - l[j]);
    g = std::min(g, l[0] + 2.0 * M_PI - l[n - 1]);
    return g;
}

// one Euler-Maruyama leg with collision-aware halving: halve the step until
// gap/sqrt(h) > 10
void eigen_step(std::vector<double>& l, double dt, sde::Rng& rng,
                std::vector<double>& drift, int depth = 0) {
    const double gap = min_gap(l);
    if (depth < 16 && gap * gap < 100.0 * dt) {
        eigen_step(l, 0.5 * dt, rng, drift, depth + 1);
        eigen_step(l, 0.5 * dt, rng, drift, depth + 1);
        return;
    }
    eigen_drift(l, drift);
    const double sd = std::sqrt(dt);
    for (std::size_t j = 0; j < l.size(); ++j) l[j] += drift[j] * dt + sd * rng.normal();
}

} // namespace

sde::SampleEnsemble unitary_eigen_sde(int n, const sde::TimeGrid& grid,
                                      std::size_t n_paths, uint64_t seed,
                                      const std::vector<double>& lambda0) {
    if (static_cast<int>(lambda0.size()) != n)
        throw std::invalid_argument("unitary_eigen_sde: lambda0 size");
    sde::SampleEnsemble e;
    e.model_tag = "unitary_eigen(" + std::to_string(n) + ")";
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = n + 1; // eigenvalues + running min gap
    e.times = grid.nodes();
    e.data.assign(n_paths * e.times.size() * e.dim, 0.0);
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        std::vector<double> l = lambda0, drift(n);
        double mg = min_gap(l);
        for (int j = 0; j < n; ++j) e.at(p, 0, j) = l[j];
        e.at(p, 0, n) = mg;
        for (int i = 0; i < grid.steps(); ++i) {
            eigen_step(l, grid.dt(i), rng, drift);
            mg = std::min(mg, min_gap(l));
            for (int j = 0; j < n; ++j) e.at(p, i + 1, j) = l[j];
            e.at(p, i + 1, n) = mg;
        }
    });
    return e;
}

double torus_vandermonde(const std::vector<double>& x) {
    double h = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k)
            h *= std::sin(0.5 * (x[j] - x[k]));
    return h;
}

double unitary_eigen_density(int n, double t, const std::vector<double>& lambda0,
                             const std::vector<double>& x) {
    const double gamma = (std::pow(n, 3.0) - n) / 12.0;
    const double hr = torus_vandermonde(x) / torus_vandermonde(lambda0);
    // K = r + n m, m in Z^n, k_j distinct; truncate at k^2 t/(2n^2) > 64
    const double kmax = n * std::sqrt(2.0 * 64.0 / t) + n;
    const int mmax = static_cast<int>(kmax / n) + 1;
    std::complex<double> total = 0.0;
    std::vector<int> kvec(n);
    // enumerate all tuples with k_j = r (mod n), |k_j| <= kmax, distinct
    std::function<void(int, int)> rec = [&](int r, int pos) {
        if (pos == n) {
            double quad = 0.0;
            for (int j = 0; j < n; ++j) quad += kvec[j] * kvec[j];
            const double gauss = std::exp(-quad * t / (2.0 * n * n));
            if (gauss < 1e-16) return;
            // det(exp(i k_j (l0_j - x_k)/n))
            Eigen::MatrixXcd M(n, n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    M(j, k) = std::exp(std::complex<double>(
                        0.0, kvec[j] * (lambda0[j] - x[k]) / n));
            total += gauss * M.determinant();
            return;
        }
        for (int m = -mmax; m <= mmax; ++m) {
            const int kj = r + n * m;
            bool dup = false;
            for (int q = 0; q < pos; ++q)
                if (kvec[q] == kj) dup = true;
            if (dup) continue;
            kvec[pos] = kj;
            rec(r, pos + 1);
        }
    };
    for (int r = 0; r < n; ++r) rec(r, 0);
    const double val = std::exp(0.5 * gamma * t) / (n * std::pow(2.0 * M_PI, n)) * hr *
                       total.real();
    return val;
}

double unitary_gap_limit_density(double v) {
    const double s = std::sin(0.5 * v);
    return s * s / M_PI;
}

double unitary_gap_density(double t, double v0, double v) {
    // gap v = l2 - l1 solves dv = sqrt(2) dW + cot(v/2) dt on (0, 2 pi); the
    // sine-series Doob transform of the Dirichlet kernel of d^2/dv^2 gives
    //   e^{t/4} (sin(v/2)/sin(v0/2)) (1/pi) sum_j e^{-j^2 t/4}
    //     sin(j v0/2) sin(j v/2).
    double sum = 0.0;
    for (int j = 1; j < 600; ++j) {
        const double gauss = std::exp(-0.25 * (j * j - 1.0) * t);
        if (gauss < 1e-17) break;
        sum += gauss * std::sin(0.5 * j * v0) * std::sin(0.5 * j * v);
    }
    return std::sin(0.5 * v) / (M_PI * std::sin(0.5 * v0)) * sum;
}

} // namespace hypoheat::mat
