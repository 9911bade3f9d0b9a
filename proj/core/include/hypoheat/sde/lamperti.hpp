#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/radial.hpp"

namespace hypoheat::sde {

/// Exact-law simulator for skew products (r(t), gamma(A(t))) whose clock
/// A(t) = int f(r) ds generates heavy tails from excursions to radial scales
/// exponentially small in t. In the Lamperti coordinate v (unit diffusion in
/// the internal time h = A) the pair becomes
///   dv = mu(v) dh + dxi(h),   dt = g(v) dh,
/// and the fiber is a Brownian motion in h itself, so A(t) = h* is read off
/// exactly. Excursions beyond the deep thresholds (where g is negligible) are
/// cut short by the exact first-passage time of the asymptotically
/// constant-drift coordinate; regions where g blows up (the physically fast
/// far field) are stepped in physical time through the radial SDE instead.
struct LampertiModel {
    std::string tag;
    std::function<double(double)> g;   // dt/dh
    std::function<double(double)> mu;  // drift of v per unit h
    double v0 = 0.0;
    double deep_lo = -std::numeric_limits<double>::infinity();
    double deep_hi = std::numeric_limits<double>::infinity();
    double drift_deep_lo = 0.0; // asymptotic drift magnitude toward deep_lo
    double drift_deep_hi = 0.0;
    /// Multiplies the internal step cap; > 1 in bands where the radial level
    /// contributes negligible physical time (pure-diffusion regions tolerate
    /// large steps; only the accuracy of int g dh constrains them).
    std::function<double(double)> step_growth; // optional

    /// Optional far-field physical mode, active when v > v_far: stepping
    /// switches to the radial SDE in physical time with the clock accumulated
    /// by the trapezoid rule (g is large and smooth there).
    struct FarField {
        double v_far = std::numeric_limits<double>::infinity();
        std::function<double(double)> r_of_v, v_of_r;
        RadialDiffusionSpec radial;           // physical-time radial SDE
        std::function<double(double)> clock;  // f(r) = dA/dt
    };
    FarField far;
    bool has_far = false;
};

/// Records (v, h) at each requested physical time. Layout per record [v, h].
SampleEnsemble lamperti_paths(const LampertiModel& model,
                              const std::vector<double>& record_times,
                              std::size_t n_paths, uint64_t seed,
                              double dh_cap = 0.05, int n_phys = 2048);

/// First passage time of BM with drift mu >= 0 toward a target at distance
/// d > 0 (Levy for mu = 0, inverse Gaussian otherwise).
double first_passage_time(double d, double mu, Rng& rng);

} // namespace hypoheat::sde
