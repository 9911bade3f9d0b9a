#include "hypoheat/sde/radial.hpp"

#include <cmath>

#include "hypoheat/sde/heun.hpp"

namespace hypoheat::sde {

namespace {

inline double reflect_into(double x, const RadialDiffusionSpec& spec) {
    if (x < spec.lo) x = spec.lo + (spec.lo - x);
    if (x > spec.hi) x = spec.hi - (x - spec.hi);
    if (x < spec.lo) x = spec.lo + 0.25 * (spec.hi - spec.lo); // pathological overshoot
    return x;
}

} // namespace

double radial_step(const RadialDiffusionSpec& spec, double r, double dt, Rng& rng,
                   RadialStepStats* stats, int depth) {
    const double guard = std::sqrt(dt);
    const bool near_lo = spec.entrance_lo && (r - spec.lo) < guard;
    const bool near_hi = spec.entrance_hi && std::isfinite(spec.hi) && (spec.hi - r) < guard;
    if ((near_lo || near_hi) && depth < 10) {
        if (stats) stats->substeps += 2;
        const double h = 0.5 * dt;
        double x = radial_step(spec, r, h, rng, stats, depth + 1);
        return radial_step(spec, x, h, rng, stats, depth + 1);
    }
    if (depth >= 10 && stats) stats->step_collapse = true;
    const double dB = std::sqrt(dt) * rng.normal();
    double next = heun_step(
        r, dt, dB, [&](double x) { return spec.drift(reflect_into(x, spec)); },
        [](double) { return 1.0; });
    return reflect_into(next, spec);
}

void radial_path(const RadialDiffusionSpec& spec, double r0, const TimeGrid& grid,
                 Rng& rng, double* out, RadialStepStats* stats) {
    double r = r0;
    out[0] = r;
    for (int i = 0; i < grid.steps(); ++i) {
        r = radial_step(spec, r, grid.dt(i), rng, stats);
        out[i + 1] = r;
    }
}

} // namespace hypoheat::sde
