#pragma once

#include <string>
#include <vector>

#include "hypoheat/sde/lamperti.hpp"
#include "hypoheat/sde/skew_product.hpp"
#include "hypoheat/stats/laws.hpp"

namespace hypoheat::fib {

/// Rank-one fibration models: compact Hopf and anti-de Sitter families over
/// the complex, quaternionic and octonionic base fields. The radial part is a
/// (circular/hyperbolic) Jacobi diffusion with the tabulated (alpha, beta);
/// the fiber Brownian motion runs at the clock tan^2 r (compact) or tanh^2 r
/// (hyperbolic).
struct FibrationModel {
    enum class Kind { CHopf, CAdS, QHopf, QAdS, OHopf, OAdS };
    Kind kind = Kind::CHopf;
    int n = 1;

    bool compact() const {
        return kind == Kind::CHopf || kind == Kind::QHopf || kind == Kind::OHopf;
    }
    double alpha() const;
    double beta() const;
    int fiber_dim() const; // 1, 3 or 7
    std::string tag() const;

    /// Exponent (alpha+1) of the Girsanov prefactor e^{-(alpha+1) mu t}.
    double girsanov_power() const { return alpha() + 1.0; }
};

FibrationModel make_fibration(FibrationModel::Kind kind, int n = 1);

/// Exact-law area simulation via the Lamperti substitution; records [r, A]
/// per requested time. The su(2)/Im(O) area vector is the flat fiber BM at A:
/// draw it with sde-style fiber sampling (see fiber_from_clock below).
sde::SampleEnsemble simulate_fibration_exact(const FibrationModel& model,
                                             const std::vector<double>& record_times,
                                             std::size_t n_paths, uint64_t seed);

/// Shared helper (also used by the winding module): Brownian fiber values at
/// the recorded clock times. Layout [path][record][fiber_dim].
std::vector<double> fiber_from_clock(const sde::SampleEnsemble& rA, int fiber_dim,
                                     uint64_t seed);

/// Structural simulation (group/sphere fiber states carried explicitly) via
/// the generic skew-product engine.
sde::SampleEnsemble simulate_fibration_skew(const FibrationModel& model,
                                            const sde::TimeGrid& grid,
                                            std::size_t n_paths, uint64_t seed,
                                            std::vector<int> record_nodes = {});

sde::LampertiModel lamperti_model(const FibrationModel& model);
sde::SkewProductSpec skew_spec(const FibrationModel& model);

struct LimitLaw {
    std::function<double(double)> scaling;
    stats::LawDescriptor law;
};

/// Long-time area limits. OHopf carries the corrected Gaussian law
/// N(0, (4/3) I_7) (the clock average under Jacobi(3,3)); see the docs.
LimitLaw limit_law(const FibrationModel& model);

} // namespace hypoheat::fib
