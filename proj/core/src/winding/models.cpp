#include "hypoheat/winding/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypoheat/special/bessel.hpp"
#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::wind {


namespace {
inline double model_r0_guard(double r0) { return r0; }
} // namespace

std::string WindingModel::tag() const {
    switch (kind) {
        case Kind::Plane: return "wind_plane";
        case Kind::Quaternionic: return "wind_quat";
        case Kind::CP1: return "wind_cp1";
        case Kind::CH1: return "wind_ch1";
        case Kind::HP1: return "wind_hp1";
        case Kind::HH1: return "wind_hh1";
    }
    return "?";
}

int WindingModel::fiber_dim() const {
    return (kind == Kind::Plane || kind == Kind::CP1 || kind == Kind::CH1) ? 1 : 3;
}

WindingModel make_winding_model(WindingModel::Kind kind, double r0) {
    WindingModel m;
    m.kind = kind;
    m.r0 = r0;
    if (r0 <= 0.0) throw std::invalid_argument("winding model: r0 > 0 required");
    if ((kind == WindingModel::Kind::CP1 || kind == WindingModel::Kind::HP1) &&
        r0 >= M_PI_2)
        throw std::invalid_argument("winding model: r0 in (0, pi/2)");
    return m;
}

sde::SkewProductSpec WindingModel::skew_spec() const {
    sde::SkewProductSpec s;
    s.tag = tag();
    s.r0 = r0;
    switch (kind) {
        case Kind::Plane:
            s.radial = {[](double r) { return 0.5 / r; }, 0.0,
                        std::numeric_limits<double>::infinity(), true, false};
            s.clock = [](double r) { return 1.0 / (r * r); };
            s.fiber = sde::FiberKind::Scalar;
            break;
        case Kind::Quaternionic:
            s.radial = {[](double r) { return 1.5 / r; }, 0.0,
                        std::numeric_limits<double>::infinity(), true, false};
            s.clock = [](double r) { return 1.0 / (r * r); };
            s.fiber = sde::FiberKind::Flat3;
            break;
        case Kind::CP1:
            s.radial = {[](double r) { return 1.0 / std::tan(2.0 * r); }, 0.0, M_PI_2,
                        true, true};
            s.clock = [](double r) {
                const double sn = std::sin(2.0 * r);
                return 4.0 / (sn * sn);
            };
            s.fiber = sde::FiberKind::Scalar;
            break;
        case Kind::CH1:
            s.radial = {[](double r) { return 1.0 / std::tanh(2.0 * r); }, 0.0,
                        std::numeric_limits<double>::infinity(), true, false};
            s.clock = [](double r) {
                const double sn = std::sinh(2.0 * r);
                return 4.0 / (sn * sn);
            };
            s.fiber = sde::FiberKind::Scalar;
            break;
        case Kind::HP1:
            s.radial = {[](double r) { return 3.0 / std::tan(2.0 * r); }, 0.0, M_PI_2,
                        true, true};
            s.clock = [](double r) {
                const double sn = std::sin(2.0 * r);
                return 4.0 / (sn * sn);
            };
            s.fiber = sde::FiberKind::Flat3;
            break;
        case Kind::HH1:
            s.radial = {[](double r) { return 3.0 / std::tanh(2.0 * r); }, 0.0,
                        std::numeric_limits<double>::infinity(), true, false};
            s.clock = [](double r) {
                const double sn = std::sinh(2.0 * r);
                return 4.0 / (sn * sn);
            };
            s.fiber = sde::FiberKind::Flat3;
            break;
    }
    return s;
}

double yor_winding_cf(double lam, double t, double rho, double x_norm) {
    const double a = x_norm * rho / t;
    return std::exp(sfn::log_besseli(lam, a) - sfn::log_besseli(0.0, a));
}

double hartman_watson_cf(double nu, double lam, double a) {
    return std::exp(sfn::log_besseli(std::sqrt(nu * nu + 2.0 * lam), a) -
                    sfn::log_besseli(nu, a));
}

double quat_winding_cf(double lam_norm, double t, double rho) {
    const double nu = std::sqrt(1.0 + lam_norm * lam_norm);
    auto f = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double logv = sfn::log_besseli(nu, r * rho / t) - r * r / (2.0 * t) +
                            2.0 * std::log(r);
        return std::exp(logv);
    };
    const double rmax = rho + 14.0 * std::sqrt(t) + 5.0;
    sfn::QuadResult q = sfn::integrate(f, 0.0, rmax, 1e-11, 16);
    if (!q.converged) throw std::runtime_error("quat_winding_cf: quadrature failure");
    return std::exp(-rho * rho / (2.0 * t)) / (t * rho) * q.value;
}

double loop_winding_phi(double r, double u) {
    auto f = [&](double s) { return std::exp(-r * std::cosh(s)) / (s * s + u * u); };
    const double smax = std::acosh(60.0 / r + 1.0) + 2.0;
    return u / M_PI * sfn::integrate(f, 0.0, smax, 1e-13, 16).value;
}

double loop_winding_pmf(int n, double x_norm) {
    const double R = x_norm * x_norm;
    if (n == 0) return 1.0 - 2.0 * std::exp(-R) * loop_winding_phi(R, M_PI);
    const int k = std::abs(n);
    return std::exp(-R) * (loop_winding_phi(R, (2.0 * k - 1.0) * M_PI) -
                           loop_winding_phi(R, (2.0 * k + 1.0) * M_PI));
}

double hh1_limit_cf(double lam_norm, double r0) {
    const double mu = std::sqrt(lam_norm * lam_norm + 1.0) - 1.0;
    const double ch = std::cosh(r0);
    return std::pow(std::tanh(r0), mu) * (1.0 + mu / (2.0 * ch * ch));
}

double hh1_limit_density(double x_norm, double r0) {
    // F(u) = (1/2pi^2) y e^y K2(rho)/rho^2, y = -ln tanh u, rho = sqrt(x^2+y^2);
    // density = F(r0) + (tanh r0 / 2) F'(r0), K2' = -(K1+K3)/2.
    const double x2 = x_norm * x_norm;
    auto F = [&](double u) {
        const double y = -std::log(std::tanh(u));
        const double rho = std::sqrt(x2 + y * y);
        return 1.0 / (2.0 * M_PI * M_PI) * y * std::exp(y) * sfn::besselk(2.0, rho) /
               (rho * rho);
    };
    auto Fp = [&](double u) {
        const double y = -std::log(std::tanh(u));
        const double yp = -2.0 / std::sinh(2.0 * u);
        const double rho = std::sqrt(x2 + y * y);
        const double rhop = y * yp / rho;
        const double k1 = sfn::besselk(1.0, rho), k2 = sfn::besselk(2.0, rho),
                     k3 = sfn::besselk(3.0, rho);
        const double k2p = -0.5 * (k1 + k3);
        return std::exp(y) / (2.0 * M_PI * M_PI) *
               (yp * (1.0 + y) * k2 / (rho * rho) +
                y * rhop * (k2p / (rho * rho) - 2.0 * k2 / (rho * rho * rho)));
    };
    return F(r0) + 0.5 * std::tanh(r0) * Fp(r0);
}

LimitLaw winding_limit(const WindingModel& model) {
    LimitLaw out;
    switch (model.kind) {
        case WindingModel::Kind::Plane:
            out.scaling = [](double t) { return 2.0 / std::log(t); };
            out.law = stats::cauchy_law(1.0);
            break;
        case WindingModel::Kind::Quaternionic:
            // 2 zeta/sqrt(log t) has componentwise variance 2 (the clock
            // integral grows like log(t)/2); see the errata note in the docs
            out.scaling = [](double t) { return 2.0 / std::sqrt(std::log(t)); };
            out.law = stats::gaussian_law(0.0, 2.0, 3);
            break;
        case WindingModel::Kind::CP1:
            out.scaling = [](double t) { return 1.0 / t; };
            out.law = stats::cauchy_law(2.0);
            break;
        case WindingModel::Kind::CH1:
            out.scaling = [](double) { return 1.0; };
            out.law = stats::cauchy_law(std::log(1.0 / std::tanh(model.r0)));
            break;
        case WindingModel::Kind::HP1:
            // sqrt(t) scaling; componentwise variance 6 = the stationary
            // average of the clock 4/sin^2(2r) under Jacobi(1,1) (see docs
            // for the errata note on the printed constant)
            out.scaling = [](double t) { return 1.0 / std::sqrt(t); };
            out.law = stats::gaussian_law(0.0, 6.0, 3);
            break;
        case WindingModel::Kind::HH1: {
            const double r0 = model.r0;
            out.scaling = [](double) { return 1.0; };
            out.law = stats::custom_cf_law([r0](double l) { return hh1_limit_cf(l, r0); }, 3,
                                           "hh1_limit(r0=" + std::to_string(r0) + ")");
            break;
        }
    }
    return out;
}

sde::SampleEnsemble simulate_winding(const WindingModel& model, const sde::TimeGrid& grid,
                                     std::size_t n_paths, uint64_t seed,
                                     std::vector<int> record_nodes) {
    return sde::skew_product(model.skew_spec(), grid, n_paths, seed,
                             std::move(record_nodes));
}

sde::SampleEnsemble simulate_winding_coupled(const WindingModel& model,
                                             const sde::TimeGrid& grid,
                                             std::size_t n_paths, uint64_t seed) {
    const auto spec = model.skew_spec();
    const int fd = model.fiber_dim();
    sde::SampleEnsemble e;
    e.model_tag = model.tag() + "|coupled";
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = 1 + fd;
    e.times = {grid.horizon()};
    e.data.assign(n_paths * e.dim, 0.0);
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        double r = spec.r0;
        double z[3] = {0, 0, 0};
        for (int i = 0; i < grid.steps(); ++i) {
            double dA = 0.0;
            r = sde::radial_step_clock(spec.radial, spec.clock, r, grid.dt(i), rng, dA);
            const double sd = std::sqrt(dA);
            for (int j = 0; j < fd; ++j) z[j] += sd * rng.normal();
        }
        e.at(p, 0, 0) = r;
        for (int j = 0; j < fd; ++j) e.at(p, 0, 1 + j) = z[j];
    });
    return e;
}


sde::LampertiModel lamperti_model(const WindingModel& model) {
    // Additive coordinates: u = ln r (flat), ln tan r (compact), ln tanh r
    // (hyperbolic); du = dxi(h) + mu(u) dh with h the winding clock and
    // dt = g(u) dh. Quiet deep bands take growing steps (the radial level is
    // pure diffusion there and contributes negligible physical time); the
    // far field of the noncompact models is stepped physically.
    sde::LampertiModel m;
    m.tag = model.tag() + "|lamperti";
    const double deep = 7.0;
    auto band_growth = [](double center) {
        return [center](double u) {
            const double b = std::max(0.0, std::abs(u - center) - 1.5);
            return 1.0 + 2.0 * b * b;
        };
    };
    switch (model.kind) {
        case WindingModel::Kind::Plane:
        case WindingModel::Kind::Quaternionic: {
            const bool quat = model.kind == WindingModel::Kind::Quaternionic;
            m.g = [](double u) { return std::exp(2.0 * u); };
            m.mu = [quat](double) { return quat ? 1.0 : 0.0; };
            m.v0 = std::log(model.r0);
            m.deep_lo = m.v0 - deep;
            m.drift_deep_lo = quat ? 1.0 : 0.0;
            m.step_growth = band_growth(m.v0);
            // far field r > e: direct radial stepping, clock 1/r^2
            m.has_far = true;
            m.far.v_far = 1.0;
            m.far.r_of_v = [](double u) { return std::exp(u); };
            m.far.v_of_r = [](double r) { return std::log(r); };
            m.far.radial = {quat ? std::function<double(double)>(
                                       [](double r) { return 1.5 / r; })
                                 : std::function<double(double)>(
                                       [](double r) { return 0.5 / r; }),
                            0.0, std::numeric_limits<double>::infinity(), true, false};
            m.far.clock = [](double r) { return 1.0 / (r * r); };
            break;
        }
        case WindingModel::Kind::CP1:
        case WindingModel::Kind::HP1: {
            // u = ln tan r; g = 1/(4 cosh^2 u); drift 0 (CP1) or -tanh u (HP1)
            const bool hp = model.kind == WindingModel::Kind::HP1;
            m.g = [](double u) {
                const double c = std::cosh(u);
                return 0.25 / (c * c);
            };
            m.mu = [hp](double u) { return hp ? -std::tanh(u) : 0.0; };
            m.v0 = std::log(std::tan(model.r0));
            m.deep_lo = -deep;
            m.deep_hi = deep;
            m.drift_deep_lo = hp ? 1.0 : 0.0;
            m.drift_deep_hi = hp ? 1.0 : 0.0;
            m.step_growth = band_growth(0.0);
            break;
        }
        case WindingModel::Kind::CH1:
        case WindingModel::Kind::HH1: {
            // u = ln tanh r < 0; g = 1/(4 sinh^2 u); drift 0 (CH1) or -coth u
            const bool hh = model.kind == WindingModel::Kind::HH1;
            m.g = [](double u) {
                if (u > -1e-12) u = -1e-12;
                const double s = std::sinh(u);
                return 0.25 / (s * s);
            };
            m.mu = [hh](double u) {
                if (!hh) return 0.0;
                if (u > -1e-6) u = -1e-6;
                return -1.0 / std::tanh(u);
            };
            m.v0 = std::log(std::tanh(model.r0));
            m.deep_lo = std::min(m.v0, 0.0) - deep;
            m.drift_deep_lo = hh ? 1.0 : 0.0;
            m.step_growth = band_growth(std::min(0.0, m.v0));
            // far field r > 2: physical stepping with clock 4/sinh^2(2r)
            m.has_far = true;
            m.far.v_far = std::log(std::tanh(2.0));
            m.far.r_of_v = [](double u) {
                return std::atanh(std::min(1.0 - 1e-16, std::exp(u)));
            };
            m.far.v_of_r = [](double r) { return std::log(std::tanh(r)); };
            m.far.radial = {hh ? std::function<double(double)>([](double r) {
                                   return 3.0 / std::tanh(2.0 * r);
                               })
                               : std::function<double(double)>([](double r) {
                                     return 1.0 / std::tanh(2.0 * r);
                                 }),
                            1e-9, std::numeric_limits<double>::infinity(), true, false};
            m.far.clock = [](double r) {
                const double s = std::sinh(2.0 * r);
                return 4.0 / (s * s);
            };
            break;
        }
    }
    return m;
}

sde::SampleEnsemble simulate_winding_exact(const WindingModel& model,
                                           const std::vector<double>& record_times,
                                           std::size_t n_paths, uint64_t seed) {
    auto m = lamperti_model(model);
    auto e = sde::lamperti_paths(m, record_times, n_paths, seed);
    // map the additive coordinate back to the radius
    for (std::size_t p = 0; p < e.n_paths; ++p)
        for (std::size_t k = 0; k < e.times.size(); ++k) {
            double& v = e.at(p, k, 0);
            switch (model.kind) {
                case WindingModel::Kind::Plane:
                case WindingModel::Kind::Quaternionic: v = std::exp(v); break;
                case WindingModel::Kind::CP1:
                case WindingModel::Kind::HP1: v = std::atan(std::exp(v)); break;
                case WindingModel::Kind::CH1:
                case WindingModel::Kind::HH1:
                    v = std::atanh(std::min(1.0 - 1e-16, std::exp(v)));
                    break;
            }
        }
    e.model_tag = model.tag() + "|exact";
    return e;
}

std::vector<double> fiber_from_clock(const sde::SampleEnsemble& rA, int fiber_dim,
                                     uint64_t seed) {
    std::vector<double> out(rA.n_paths * rA.times.size() * fiber_dim, 0.0);
    sde::parallel_over_paths(rA.n_paths, seed ^ 0x5bd1e995u, [&](std::size_t p,
                                                                 sde::Rng& rng) {
        double prevA = 0.0;
        std::vector<double> acc(fiber_dim, 0.0);
        for (std::size_t k = 0; k < rA.times.size(); ++k) {
            const double A = rA.at(p, k, 1);
            const double sd = std::sqrt(std::max(0.0, A - prevA));
            for (int j = 0; j < fiber_dim; ++j) {
                acc[j] += sd * rng.normal();
                out[(p * rA.times.size() + k) * fiber_dim + j] = acc[j];
            }
            prevA = A;
        }
    });
    return out;
}

namespace {

// winding angle increment over one bridge segment, refined until each
// sub-increment is < pi/2 (or depth exhausted)
double angle_increment(double x0, double y0, double x1, double y1, double dt,
                       sde::Rng& rng, int depth) {
    const double d = std::atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1);
    if (std::abs(d) < M_PI_2 || depth <= 0) return d;
    // conditional midpoint of the Brownian bridge between the endpoints
    const double sd = 0.5 * std::sqrt(dt);
    const double mx = 0.5 * (x0 + x1) + sd * rng.normal();
    const double my = 0.5 * (y0 + y1) + sd * rng.normal();
    return angle_increment(x0, y0, mx, my, 0.5 * dt, rng, depth - 1) +
           angle_increment(mx, my, x1, y1, 0.5 * dt, rng, depth - 1);
}

} // namespace

std::vector<int> loop_winding_mc(double x_norm, int steps, std::size_t n_paths,
                                 uint64_t seed) {
    std::vector<int> out(n_paths, 0);
    const double dt = 1.0 / steps;
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        // bridge from (x,0) back to itself: B(s) = x + W(s) - s W(1)
        std::vector<double> wx(steps + 1, 0.0), wy(steps + 1, 0.0);
        for (int i = 0; i < steps; ++i) {
            const double sd = std::sqrt(dt);
            wx[i + 1] = wx[i] + sd * rng.normal();
            wy[i + 1] = wy[i] + sd * rng.normal();
        }
        double angle = 0.0;
        double px = x_norm, py = 0.0;
        for (int i = 1; i <= steps; ++i) {
            const double s = static_cast<double>(i) / steps;
            const double bx = x_norm + wx[i] - s * wx[steps];
            const double by = wy[i] - s * wy[steps];
            angle += angle_increment(px, py, bx, by, dt, rng, 24);
            px = bx;
            py = by;
        }
        out[p] = static_cast<int>(std::lround(angle / (2.0 * M_PI)));
    });
    return out;
}

} // namespace hypoheat::wind
