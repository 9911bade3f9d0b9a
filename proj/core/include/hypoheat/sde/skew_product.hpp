#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/radial.hpp"

namespace hypoheat::sde {

/// Fiber of a skew product: flat Brownian fibers carry the area/winding value
/// directly; group fibers carry the state needed by reconstruction checks.
enum class FiberKind {
    Scalar,    // S^1: 1 value
    Flat3,     // su(2) ~ R^3 area vector
    Flat7,     // Im O ~ R^7 area vector
    SU2Group,  // unit quaternion, left-increment exp-Euler (4 values)
    S7Sphere   // Stroock SDE on S^7 c R^8, renormalized (8 values)
};

inline int fiber_state_dim(FiberKind k) {
    switch (k) {
        case FiberKind::Scalar: return 1;
        case FiberKind::Flat3: return 3;
        case FiberKind::Flat7: return 7;
        case FiberKind::SU2Group: return 4;
        case FiberKind::S7Sphere: return 8;
    }
    return 0;
}

/// (r(t), Theta(A(t))) with A(t) = int_0^t f(r(s)) ds accumulated by the
/// trapezoid rule on the (sub-stepped) radial path; the fiber advances by
/// increments of variance dA generated on demand.
struct SkewProductSpec {
    std::string tag;
    RadialDiffusionSpec radial;
    double r0 = 0.0;
    std::function<double(double)> clock; // f(r) >= 0
    FiberKind fiber = FiberKind::Scalar;
};

/// Record layout per node: [r, A, fiber...]; times = grid nodes selected by
/// record_nodes (empty = terminal node only).
SampleEnsemble skew_product(const SkewProductSpec& spec, const TimeGrid& grid,
                            std::size_t n_paths, uint64_t seed,
                            std::vector<int> record_nodes = {});

/// One radial grid step with the clock accumulated across boundary substeps.
double radial_step_clock(const RadialDiffusionSpec& spec,
                         const std::function<double(double)>& f, double r, double dt,
                         Rng& rng, double& clock_acc, RadialStepStats* stats = nullptr,
                         int depth = 0);

} // namespace hypoheat::sde
