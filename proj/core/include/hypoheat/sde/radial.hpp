#pragma once

#include <functional>
#include <limits>

#include "hypoheat/sde/rng.hpp"
#include "hypoheat/sde/time_grid.hpp"

namespace hypoheat::sde {

/// Radial diffusion dr = b(r) dt + dB on (lo, hi), with entrance boundaries
/// handled by sub-stepping plus reflection of overshoot (never clamping).
struct RadialDiffusionSpec {
    std::function<double(double)> drift;
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool entrance_lo = true;
    bool entrance_hi = false;
};

struct RadialStepStats {
    long substeps = 0;
    bool step_collapse = false; // sub-stepping exceeded 2^10 refinements
};

/// Advances r by dt. Near a boundary (within sqrt(step)) the step is halved
/// recursively; an overshoot across the boundary is reflected.
double radial_step(const RadialDiffusionSpec& spec, double r, double dt, Rng& rng,
                   RadialStepStats* stats = nullptr, int depth = 0);

/// Full path on a grid; records r at every node into out[0..steps].
void radial_path(const RadialDiffusionSpec& spec, double r0, const TimeGrid& grid,
                 Rng& rng, double* out, RadialStepStats* stats = nullptr);

} // namespace hypoheat::sde
