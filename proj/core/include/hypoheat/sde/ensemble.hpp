#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypoheat/sde/rng.hpp"
#include "hypoheat/sde/time_grid.hpp"

namespace hypoheat::sde {

/// Worker count used by parallel_over_paths. 0 = hardware concurrency.
void set_worker_count(int n);
int worker_count();

/// Runs body(path_index, rng) for each path, with per-path streams keyed by
/// (seed, path index). Bit-identical results for any worker count.
void parallel_over_paths(std::size_t n_paths, uint64_t seed,
                         const std::function<void(std::size_t, Rng&)>& body);

/// Monte Carlo substrate: per-path terminal states (and optionally recorded
/// trajectories) for one model run.
struct SampleEnsemble {
    std::string model_tag;
    std::vector<double> times;          // grid nodes
    std::size_t n_paths = 0;
    std::size_t dim = 0;                // state dimension per record
    std::vector<double> data;           // [path][record][dim], records = times.size()
    uint64_t master_seed = 0;

    double& at(std::size_t path, std::size_t record, std::size_t d) {
        return data[(path * times.size() + record) * dim + d];
    }
    double at(std::size_t path, std::size_t record, std::size_t d) const {
        return data[(path * times.size() + record) * dim + d];
    }
};

/// i.i.d. Gaussian increments summed into d-dimensional Brownian paths,
/// recorded at every grid node.
SampleEnsemble brownian_ensemble(int d, const TimeGrid& grid, std::size_t n_paths,
                                 uint64_t seed);

} // namespace hypoheat::sde
