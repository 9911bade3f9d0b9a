#pragma once

#include <array>
#include <functional>
#include <string>

#include "hypoheat/sde/lamperti.hpp"
#include "hypoheat/sde/skew_product.hpp"
#include "hypoheat/stats/laws.hpp"

namespace hypoheat::wind {

/// Winding functionals: planar/quaternionic flat windings and the four
/// curved rank-one models, all represented by their radial diffusion plus
/// time-changed fiber Brownian motion.
struct WindingModel {
    enum class Kind { Plane, Quaternionic, CP1, CH1, HP1, HH1 };
    Kind kind = Kind::Plane;
    double r0 = 1.0;

    std::string tag() const;
    int fiber_dim() const; // 1 or 3
    sde::SkewProductSpec skew_spec() const;
};

WindingModel make_winding_model(WindingModel::Kind kind, double r0);

/// Yor: E[e^{i lam zeta(t)} | r(t)=|x|] = I_lam(|x| rho/t)/I_0(|x| rho/t).
double yor_winding_cf(double lam, double t, double rho, double x_norm);

/// I_{sqrt(nu^2+2 lam)}(a)/I_nu(a).
double hartman_watson_cf(double nu, double lam, double a);

/// Quaternionic winding CF at time t from radius rho:
/// (e^{-rho^2/2t}/(t rho)) int_0^inf I_{sqrt(1+|lam|^2)}(r rho/t) e^{-r^2/2t} r^2 dr.
double quat_winding_cf(double lam_norm, double t, double rho);

/// P(zeta(1) = 2 pi n) for the Brownian loop pinned at |x| = x_norm.
double loop_winding_pmf(int n, double x_norm);

/// Phi_r(u) = (u/pi) int_0^inf e^{-r cosh s} ds/(s^2+u^2).
double loop_winding_phi(double r, double u);

/// HH1 limit law: CF and density of zeta_infty started at radius r0.
double hh1_limit_cf(double lam_norm, double r0);
double hh1_limit_density(double x_norm, double r0);

struct LimitLaw {
    std::function<double(double)> scaling; // multiply zeta(t) by scaling(t)
    stats::LawDescriptor law;
};

/// The model's Spitzer-type limit: scaling and reference law.
LimitLaw winding_limit(const WindingModel& model);

/// zeta(t) samples via the skew product; record layout per node [r, A, fiber..].
sde::SampleEnsemble simulate_winding(const WindingModel& model, const sde::TimeGrid& grid,
                                     std::size_t n_paths, uint64_t seed,
                                     std::vector<int> record_nodes = {});

/// Coupled-SDE route (r, zeta) for the curved models: d zeta_i =
/// sqrt(f(r)) dW_i alongside the radial SDE -- the other side of the
/// time-change identity. Layout per node [r, zeta...].
sde::SampleEnsemble simulate_winding_coupled(const WindingModel& model,
                                             const sde::TimeGrid& grid,
                                             std::size_t n_paths, uint64_t seed);


/// Exact-law simulation through the Lamperti time substitution: the internal
/// time h of the additive radial coordinate IS the winding clock, so the
/// heavy tails produced by excursions to exponentially small radial scales
/// are captured exactly. Records per time: [r, A]. The fiber is a Brownian
/// motion in A: draw it with `fiber_from_clock`.
sde::LampertiModel lamperti_model(const WindingModel& model);
sde::SampleEnsemble simulate_winding_exact(const WindingModel& model,
                                           const std::vector<double>& record_times,
                                           std::size_t n_paths, uint64_t seed);

/// Given consecutive clock values per path, draws gamma(A) increments;
/// columns = fiber_dim per record. Uses a stream keyed off (seed, path).
std::vector<double> fiber_from_clock(const sde::SampleEnsemble& rA, int fiber_dim,
                                     uint64_t seed);

/// Winding counts of the Brownian loop at |x| = x_norm over [0,1]; angle
/// tracking with recursive bridge refinement near the origin.
std::vector<int> loop_winding_mc(double x_norm, int steps, std::size_t n_paths,
                                 uint64_t seed);

} // namespace hypoheat::wind
