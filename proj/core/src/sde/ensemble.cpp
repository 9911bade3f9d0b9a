#include "hypoheat/sde/ensemble.hpp"

#include <atomic>
#include <thread>

namespace hypoheat::sde {

namespace {
int g_workers = 0;
}

void set_worker_count(int n) { g_workers = n < 0 ? 0 : n; }

int worker_count() {
    if (g_workers > 0) return g_workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_over_paths(std::size_t n_paths, uint64_t seed,
                         const std::function<void(std::size_t, Rng&)>& body) {
    const int nw = std::min<std::size_t>(worker_count(), n_paths == 0 ? 1 : n_paths);
    if (nw <= 1) {
        for (std::size_t p = 0; p < n_paths; ++p) {
            Rng rng(seed, p);
            body(p, rng);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t p = next.fetch_add(1);
            if (p >= n_paths) break;
            Rng rng(seed, p);
            body(p, rng);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

SampleEnsemble brownian_ensemble(int d, const TimeGrid& grid, std::size_t n_paths,
                                 uint64_t seed) {
    SampleEnsemble e;
    e.model_tag = "brownian";
    e.times = grid.nodes();
    e.n_paths = n_paths;
    e.dim = d;
    e.master_seed = seed;
    e.data.assign(n_paths * e.times.size() * d, 0.0);
    parallel_over_paths(n_paths, seed, [&](std::size_t p, Rng& rng) {
        for (int i = 0; i < grid.steps(); ++i) {
            const double sd = std::sqrt(grid.dt(i));
            for (int j = 0; j < d; ++j)
                e.at(p, i + 1, j) = e.at(p, i, j) + sd * rng.normal();
        }
    });
    return e;
}

} // namespace hypoheat::sde
