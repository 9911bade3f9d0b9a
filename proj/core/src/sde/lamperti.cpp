#include "hypoheat/sde/lamperti.hpp"

#include <cmath>

#include "hypoheat/sde/skew_product.hpp"

namespace hypoheat::sde {

double first_passage_time(double d, double mu, Rng& rng) {
    if (mu <= 1e-12) {
        const double z = rng.normal();
        return d * d / (z * z);
    }
    const double m = d / mu, lam = d * d; // inverse Gaussian IG(d/mu, d^2)
    const double z = rng.normal();
    const double y = z * z;
    const double x = m + m * m * y / (2.0 * lam) -
                     m / (2.0 * lam) * std::sqrt(4.0 * m * lam * y + m * m * y * y);
    return rng.uniform() <= m / (m + x) ? x : m * m / x;
}

SampleEnsemble lamperti_paths(const LampertiModel& model,
                              const std::vector<double>& record_times,
                              std::size_t n_paths, uint64_t seed, double dh_cap,
                              int n_phys) {
    SampleEnsemble e;
    e.model_tag = model.tag;
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = 2;
    e.times = record_times;
    e.data.assign(n_paths * record_times.size() * 2, 0.0);
    const double t_final = record_times.back();
    (void)t_final;
    const double dt_phys = t_final / n_phys;

    parallel_over_paths(n_paths, seed, [&](std::size_t p, Rng& rng) {
        double v = model.v0, h = 0.0, t = 0.0;
        std::size_t rec = 0;
        while (rec < record_times.size()) {
            const double t_next = record_times[rec];

            if (model.has_far && v > model.far.v_far) {
                // physical-time stepping in the fast far field, with the step
                // shrunk near the switching level so re-entries stay resolved
                double r = model.far.r_of_v(v);
                const double rs = model.far.r_of_v(model.far.v_far);
                const double dr = r - rs;
                const double dt =
                    std::min({dt_phys, t_next - t, 0.05 * (1.0 + dr * dr)});
                double dA = 0.0;
                r = radial_step_clock(model.far.radial, model.far.clock, r, dt, rng, dA);
                h += dA;
                t += dt;
                v = model.far.v_of_r(r);
                if (t >= t_next - 1e-12 * t_final) {
                    e.at(p, rec, 0) = v;
                    e.at(p, rec, 1) = h;
                    ++rec;
                }
                continue;
            }

            // deep-excursion shortcut: physical time is frozen there
            if (v < model.deep_lo) {
                h += first_passage_time(model.deep_lo - v, model.drift_deep_lo, rng);
                v = model.deep_lo;
                continue;
            }
            if (v > model.deep_hi) {
                h += first_passage_time(v - model.deep_hi, model.drift_deep_hi, rng);
                v = model.deep_hi;
                continue;
            }

            const double gv = model.g(v);
            const double grow = model.step_growth ? model.step_growth(v) : 1.0;
            double dh = std::min(dh_cap * grow, dt_phys / gv);
            if (t + gv * dh >= t_next) {
                // sliver to land exactly on the record time
                const double dh_hit = (t_next - t) / gv;
                h += dh_hit;
                const double dxi = std::sqrt(dh_hit) * rng.normal();
                const double vp = v + model.mu(v) * dh_hit + dxi;
                v += 0.5 * (model.mu(v) + model.mu(vp)) * dh_hit + dxi;
                t = t_next;
                e.at(p, rec, 0) = v;
                e.at(p, rec, 1) = h;
                ++rec;
                continue;
            }
            const double dxi = std::sqrt(dh) * rng.normal();
            const double vp = v + model.mu(v) * dh + dxi;
            const double vn = v + 0.5 * (model.mu(v) + model.mu(vp)) * dh + dxi;
            const double gn = model.g(vn);
            double t_inc = 0.5 * (gv + gn) * dh;
            if (t + t_inc >= t_next) {
                // snap to the record using the averaged rate
                const double frac = (t_next - t) / t_inc;
                h += dh * frac;
                v = v + (vn - v) * frac; // weak-order interpolation
                t = t_next;
                e.at(p, rec, 0) = v;
                e.at(p, rec, 1) = h;
                ++rec;
                continue;
            }
            v = vn;
            t += t_inc;
            h += dh;
        }
    });
    return e;
}

} // namespace hypoheat::sde
