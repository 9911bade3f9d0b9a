#pragma once

#include <optional>
#include <span>

#include "hypoheat/flat/models.hpp"

namespace hypoheat::flat {

/// Conditioned characteristic function E[e^{i lambda . S(t)} | B(t) = x]:
/// (|lam| t/sinh)^p exp(-(|x|^2/2t)(|lam| t coth |lam| t - 1)). Empty x =
/// marginal: 1/cosh^p(|lam| t).
double flat_area_cf(const FlatModel& model, std::span<const double> lambda, double t,
                    std::span<const double> x = {});

/// det(tA/sinh tA)^{1/2} exp(-(1/2t) <(tA coth tA - I)x, x>) for real
/// skew-symmetric A, via the real Schur block diagonalization; |lambda_j| below
/// 1e-12 fall into the analytic lambda t/sinh -> 1 limit.
double general_skew_cf(const alg::RMatrix& A, double t, std::span<const double> x = {});

/// Rotation angles lambda_j >= 0 of the skew matrix (Schur blocks).
std::vector<double> skew_angles(const alg::RMatrix& A);

} // namespace hypoheat::flat
