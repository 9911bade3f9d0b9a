#include "hypoheat/sde/skew_product.hpp"

#include <cmath>

#include "hypoheat/algebra/quaternion.hpp"
#include "hypoheat/sde/heun.hpp"

namespace hypoheat::sde {

namespace {

inline double reflect_into(double x, const RadialDiffusionSpec& spec) {
    if (x < spec.lo) x = spec.lo + (spec.lo - x);
    if (std::isfinite(spec.hi) && x > spec.hi) x = spec.hi - (x - spec.hi);
    if (x < spec.lo) x = spec.lo + 0.25 * (spec.hi - spec.lo);
    return x;
}

// exp of the pure quaternion v . (I,J,K), |v| = angle.
alg::Quaternion quat_exp(double vx, double vy, double vz) {
    const double a = std::sqrt(vx * vx + vy * vy + vz * vz);
    if (a < 1e-300) return alg::Quaternion::one();
    const double s = std::sin(a) / a;
    return {std::cos(a), s * vx, s * vy, s * vz};
}

struct FiberState {
    double flat[7] = {0, 0, 0, 0, 0, 0, 0};
    alg::Quaternion q = alg::Quaternion::one();
    double sphere[8] = {1, 0, 0, 0, 0, 0, 0, 0};
};

void advance_fiber(FiberKind kind, FiberState& st, double dA, Rng& rng) {
    if (dA <= 0.0) return;
    const double sd = std::sqrt(dA);
    switch (kind) {
        case FiberKind::Scalar:
            st.flat[0] += sd * rng.normal();
            break;
        case FiberKind::Flat3:
            for (int i = 0; i < 3; ++i) st.flat[i] += sd * rng.normal();
            break;
        case FiberKind::Flat7:
            for (int i = 0; i < 7; ++i) st.flat[i] += sd * rng.normal();
            break;
        case FiberKind::SU2Group: {
            const double g1 = sd * rng.normal(), g2 = sd * rng.normal(),
                         g3 = sd * rng.normal();
            st.q = quat_exp(g1, g2, g3) * st.q; // left increments
            const double n = st.q.norm();
            st.q = st.q * (1.0 / n);
            break;
        }
        case FiberKind::S7Sphere: {
            // Stroock SDE d beta_j = sum_i (delta_ij - beta_j beta_i) o dB_i,
            // Heun step then renormalization.
            double dB[8], pred[8];
            for (double& v : dB) v = sd * rng.normal();
            double dot0 = 0.0;
            for (int i = 0; i < 8; ++i) dot0 += st.sphere[i] * dB[i];
            for (int j = 0; j < 8; ++j) pred[j] = st.sphere[j] + dB[j] - st.sphere[j] * dot0;
            double dotp = 0.0, np = 0.0;
            for (int i = 0; i < 8; ++i) {
                dotp += pred[i] * dB[i];
                np += pred[i] * pred[i];
            }
            np = std::sqrt(np);
            for (int j = 0; j < 8; ++j) {
                const double drift0 = dB[j] - st.sphere[j] * dot0;
                const double drift1 = dB[j] - (pred[j] / np) * (dotp / np);
                st.sphere[j] += 0.5 * (drift0 + drift1);
            }
            double nn = 0.0;
            for (double v : st.sphere) nn += v * v;
            nn = std::sqrt(nn);
            for (double& v : st.sphere) v /= nn;
            break;
        }
    }
}

void write_fiber(FiberKind kind, const FiberState& st, double* out) {
    switch (kind) {
        case FiberKind::Scalar: out[0] = st.flat[0]; break;
        case FiberKind::Flat3:
            for (int i = 0; i < 3; ++i) out[i] = st.flat[i];
            break;
        case FiberKind::Flat7:
            for (int i = 0; i < 7; ++i) out[i] = st.flat[i];
            break;
        case FiberKind::SU2Group:
            out[0] = st.q.w;
            out[1] = st.q.x;
            out[2] = st.q.y;
            out[3] = st.q.z;
            break;
        case FiberKind::S7Sphere:
            for (int i = 0; i < 8; ++i) out[i] = st.sphere[i];
            break;
    }
}

} // namespace

double radial_step_clock(const RadialDiffusionSpec& spec,
                         const std::function<double(double)>& f, double r, double dt,
                         Rng& rng, double& clock_acc, RadialStepStats* stats, int depth) {
    const double guard = std::sqrt(dt);
    const bool near_lo = spec.entrance_lo && (r - spec.lo) < guard;
    const bool near_hi = spec.entrance_hi && std::isfinite(spec.hi) && (spec.hi - r) < guard;
    if ((near_lo || near_hi) && depth < 10) {
        if (stats) stats->substeps += 2;
        const double h = 0.5 * dt;
        double x = radial_step_clock(spec, f, r, h, rng, clock_acc, stats, depth + 1);
        return radial_step_clock(spec, f, x, h, rng, clock_acc, stats, depth + 1);
    }
    if (depth >= 10 && stats) stats->step_collapse = true;
    const double dB = std::sqrt(dt) * rng.normal();
    double next = heun_step(
        r, dt, dB, [&](double x) { return spec.drift(reflect_into(x, spec)); },
        [](double) { return 1.0; });
    next = reflect_into(next, spec);
    clock_acc += 0.5 * (f(r) + f(next)) * dt;
    return next;
}

SampleEnsemble skew_product(const SkewProductSpec& spec, const TimeGrid& grid,
                            std::size_t n_paths, uint64_t seed,
                            std::vector<int> record_nodes) {
    if (record_nodes.empty()) record_nodes = {grid.steps()};
    const int fdim = fiber_state_dim(spec.fiber);

    SampleEnsemble e;
    e.model_tag = spec.tag;
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = 2 + fdim;
    for (int node : record_nodes) e.times.push_back(grid.node(node));
    e.data.assign(n_paths * record_nodes.size() * e.dim, 0.0);

    parallel_over_paths(n_paths, seed, [&](std::size_t p, Rng& rng) {
        double r = spec.r0, A = 0.0;
        FiberState st;
        std::size_t rec = 0;
        if (record_nodes[0] == 0) {
            e.at(p, 0, 0) = r;
            e.at(p, 0, 1) = A;
            write_fiber(spec.fiber, st, &e.at(p, 0, 2));
            ++rec;
        }
        for (int i = 0; i < grid.steps(); ++i) {
            double dA = 0.0;
            r = radial_step_clock(spec.radial, spec.clock, r, grid.dt(i), rng, dA);
            advance_fiber(spec.fiber, st, dA, rng);
            A += dA;
            if (rec < record_nodes.size() && record_nodes[rec] == i + 1) {
                e.at(p, rec, 0) = r;
                e.at(p, rec, 1) = A;
                write_fiber(spec.fiber, st, &e.at(p, rec, 2));
                ++rec;
            }
        }
    });
    return e;
}

} // namespace hypoheat::sde
