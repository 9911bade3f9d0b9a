#pragma once

#include <string>
#include <vector>

#include "hypoheat/algebra/cmatrix.hpp"
#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/time_grid.hpp"

namespace hypoheat::flat {

/// Flat stochastic-area models of the Heisenberg family. The H-type bracket
/// is one of the three concrete Clifford actions (complex, quaternionic,
/// octonionic J-maps), acting diagonally on n copies of the base algebra.
struct FlatModel {
    enum class Kind {
        ComplexHeisenberg,     // base R^{2n}, area dim 1
        QuaternionicHeisenberg,// base H^n = R^{4n}, area dim 3
        OctonionicHeisenberg,  // base O = R^8, area dim 7
        SkewQuadratic          // int <A B, dB> for a fixed skew-symmetric A
    };
    Kind kind = Kind::ComplexHeisenberg;
    int n = 1;
    alg::RMatrix skew; // SkewQuadratic only

    int base_dim() const;
    int area_dim() const;
    /// The sinh/cosh exponent p of the conditioned/marginal CF.
    int cf_power() const;
    std::string tag() const;

    static FlatModel complex_heisenberg(int n);
    static FlatModel quaternionic_heisenberg(int n);
    static FlatModel octonionic_heisenberg();
    static FlatModel skew_quadratic(alg::RMatrix A);
};

/// Bracket increment [x, dx] of the model's area form at the midpoint, midpoint
/// rule per coordinate; writes area_dim components.
void area_increment(const FlatModel& model, const double* mid, const double* dx,
                    double* out);

/// Terminal samples of (endpoint, area vector): ensemble dim = base_dim +
/// area_dim, one record at t.
sde::SampleEnsemble simulate_flat_area(const FlatModel& model, const sde::TimeGrid& grid,
                                       std::size_t n_paths, uint64_t seed);

} // namespace hypoheat::flat
