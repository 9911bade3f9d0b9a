#include "hypoheat/fibration/models.hpp"

#include <cmath>
#include <stdexcept>

#include "hypoheat/winding/models.hpp"

namespace hypoheat::fib {

double FibrationModel::alpha() const {
    switch (kind) {
        case Kind::CHopf:
        case Kind::CAdS: return n - 1.0;
        case Kind::QHopf:
        case Kind::QAdS: return 2.0 * n - 1.0;
        case Kind::OHopf:
        case Kind::OAdS: return 3.0;
    }
    return 0.0;
}

double FibrationModel::beta() const {
    switch (kind) {
        case Kind::CHopf:
        case Kind::CAdS: return 0.0;
        case Kind::QHopf:
        case Kind::QAdS: return 1.0;
        case Kind::OHopf:
        case Kind::OAdS: return 3.0;
    }
    return 0.0;
}

int FibrationModel::fiber_dim() const {
    switch (kind) {
        case Kind::CHopf:
        case Kind::CAdS: return 1;
        case Kind::QHopf:
        case Kind::QAdS: return 3;
        case Kind::OHopf:
        case Kind::OAdS: return 7;
    }
    return 1;
}

std::string FibrationModel::tag() const {
    switch (kind) {
        case Kind::CHopf: return "chopf(" + std::to_string(n) + ")";
        case Kind::CAdS: return "cads(" + std::to_string(n) + ")";
        case Kind::QHopf: return "qhopf(" + std::to_string(n) + ")";
        case Kind::QAdS: return "qads(" + std::to_string(n) + ")";
        case Kind::OHopf: return "ohopf";
        case Kind::OAdS: return "oads";
    }
    return "?";
}

FibrationModel make_fibration(FibrationModel::Kind kind, int n) {
    FibrationModel m;
    m.kind = kind;
    m.n = n;
    if (n < 1) throw std::invalid_argument("fibration: n >= 1");
    if ((kind == FibrationModel::Kind::OHopf || kind == FibrationModel::Kind::OAdS) &&
        n != 1)
        throw std::invalid_argument("fibration: octonionic models have n = 1");
    return m;
}

sde::SkewProductSpec skew_spec(const FibrationModel& model) {
    sde::SkewProductSpec s;
    s.tag = model.tag();
    s.r0 = 1e-9;
    const double a = model.alpha(), b = model.beta();
    if (model.compact()) {
        s.radial = {[a, b](double r) {
                        return (a + 0.5) / std::tan(r) - (b + 0.5) * std::tan(r);
                    },
                    0.0, M_PI_2, true, true};
        s.clock = [](double r) {
            const double x = std::tan(r);
            return x * x;
        };
    } else {
        s.radial = {[a, b](double r) {
                        return (a + 0.5) / std::tanh(r) + (b + 0.5) * std::tanh(r);
                    },
                    0.0, std::numeric_limits<double>::infinity(), true, false};
        s.clock = [](double r) {
            const double x = std::tanh(r);
            return x * x;
        };
    }
    switch (model.fiber_dim()) {
        case 1: s.fiber = sde::FiberKind::Scalar; break;
        case 3: s.fiber = sde::FiberKind::SU2Group; break;
        case 7: s.fiber = sde::FiberKind::S7Sphere; break;
    }
    return s;
}

sde::LampertiModel lamperti_model(const FibrationModel& model) {
    // Compact: v = -ln cos r in (0, inf), dv = dxi + ((alpha+1) g - beta) dh,
    // g = dt/dh = 1/(e^{2v}-1); the r -> pi/2 pole (v large) freezes physical
    // time with back-drift beta. Hyperbolic: v = ln cosh r, g = 1/(1-e^{-2v})
    // -> 1, dv = dxi + ((alpha+1) g + beta) dh.
    sde::LampertiModel m;
    m.tag = model.tag() + "|lamperti";
    const double a1 = model.alpha() + 1.0, b = model.beta();
    if (model.compact()) {
        m.g = [](double v) { return 1.0 / std::expm1(2.0 * v); };
        m.mu = [a1, b](double v) { return a1 / std::expm1(2.0 * v) - b; };
        m.deep_hi = 7.0;
        m.drift_deep_hi = b;
        m.step_growth = [](double v) {
            const double band = std::max(0.0, v - 1.5);
            return 1.0 + 2.0 * band * band;
        };
    } else {
        m.g = [](double v) { return 1.0 / (-std::expm1(-2.0 * v)); };
        m.mu = [a1, b](double v) { return a1 / (-std::expm1(-2.0 * v)) + b; };
    }
    m.v0 = 0.0; // adjusted by the entrance start in the simulator
    return m;
}

sde::SampleEnsemble simulate_fibration_exact(const FibrationModel& model,
                                             const std::vector<double>& record_times,
                                             std::size_t n_paths, uint64_t seed) {
    // entrance start at r = 0: advance one exact short Bessel(2 alpha + 2) leg
    // in physical time, then run the Lamperti coordinate from there. The
    // start-leg clock contribution is O(t0^2) and accounted by the trapezoid.
    auto base = lamperti_model(model);
    const double t0 = record_times.front() * 1e-4;
    const double a = model.alpha();
    const bool compact = model.compact();

    sde::SampleEnsemble e;
    e.model_tag = model.tag() + "|exact";
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = 2;
    e.times = record_times;
    e.data.assign(n_paths * record_times.size() * 2, 0.0);
    const double t_final = record_times.back();
    const int n_phys = 2048;

    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        // exact Bessel start: r(t0)^2 = 2 t0 Gamma(a+1) variate
        double gshape = a + 1.0;
        // Marsaglia-Tsang gamma sampler (shape >= 1 here since alpha >= 0)
        auto gamma_draw = [&](double shape) {
            const double d = shape - 1.0 / 3.0;
            const double c = 1.0 / std::sqrt(9.0 * d);
            for (;;) {
                double x, v;
                do {
                    x = rng.normal();
                    v = 1.0 + c * x;
                } while (v <= 0.0);
                v = v * v * v;
                const double u = rng.uniform();
                if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
                if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
            }
        };
        const double r_t0 = std::sqrt(2.0 * t0 * gamma_draw(gshape));
        const double clock0 = compact ? std::pow(std::tan(r_t0), 2.0)
                                      : std::pow(std::tanh(r_t0), 2.0);
        double v = compact ? -std::log(std::cos(r_t0)) : std::log(std::cosh(r_t0));
        double h = 0.5 * clock0 * t0;
        double t = t0;

        const double dt_phys = t_final / n_phys;
        std::size_t rec = 0;
        while (rec < record_times.size()) {
            const double t_next = record_times[rec];
            if (compact && v > base.deep_hi) {
                h += sde::first_passage_time(v - base.deep_hi, base.drift_deep_hi, rng);
                v = base.deep_hi;
                continue;
            }
            const double gv = base.g(std::max(v, 1e-12));
            const double grow = base.step_growth ? base.step_growth(v) : 1.0;
            double dh = std::min(0.05 * grow, dt_phys / gv);
            const double dxi = std::sqrt(dh) * rng.normal();
            const double mu0 = base.mu(std::max(v, 1e-12));
            double vp = v + mu0 * dh + dxi;
            if (vp < 1e-12) vp = 2e-12 - vp;
            double vn = v + 0.5 * (mu0 + base.mu(vp)) * dh + dxi;
            if (vn < 1e-12) vn = 2e-12 - vn;
            const double t_inc = 0.5 * (gv + base.g(vn)) * dh;
            if (t + t_inc >= t_next) {
                const double frac = (t_next - t) / t_inc;
                h += dh * frac;
                v = v + (vn - v) * frac;
                t = t_next;
                e.at(p, rec, 0) = compact ? std::acos(std::exp(-v))
                                          : std::acosh(std::exp(v));
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

std::vector<double> fiber_from_clock(const sde::SampleEnsemble& rA, int fiber_dim,
                                     uint64_t seed) {
    return wind::fiber_from_clock(rA, fiber_dim, seed);
}

sde::SampleEnsemble simulate_fibration_skew(const FibrationModel& model,
                                            const sde::TimeGrid& grid,
                                            std::size_t n_paths, uint64_t seed,
                                            std::vector<int> record_nodes) {
    return sde::skew_product(skew_spec(model), grid, n_paths, seed,
                             std::move(record_nodes));
}

LimitLaw limit_law(const FibrationModel& model) {
    LimitLaw out;
    switch (model.kind) {
        case FibrationModel::Kind::CHopf:
            out.scaling = [](double t) { return 1.0 / t; };
            out.law = stats::cauchy_law(static_cast<double>(model.n));
            break;
        case FibrationModel::Kind::CAdS:
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 1.0, 1);
            break;
        case FibrationModel::Kind::QHopf:
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 2.0 * model.n, 3);
            break;
        case FibrationModel::Kind::QAdS:
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 1.0, 3);
            break;
        case FibrationModel::Kind::OHopf:
            // stationary clock average E[tan^2 r] = 4/3 under Jacobi(3,3)
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 4.0 / 3.0, 7);
            break;
        case FibrationModel::Kind::OAdS:
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 1.0, 7);
            break;
    }
    return out;
}

} // namespace hypoheat::fib
