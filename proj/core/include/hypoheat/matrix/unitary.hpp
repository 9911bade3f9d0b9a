#pragma once

#include <functional>
#include <vector>

#include "hypoheat/algebra/cmatrix.hpp"
#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/group_integrator.hpp"
#include "hypoheat/sde/time_grid.hpp"

namespace hypoheat::mat {

/// Brownian motion on U(n): U <- U exp(dA) with dA drawn from the u(n) basis
/// of the chosen inner-product convention and a polar retraction every 64
/// steps. `observe(path, node, U)` is called at every node.
void unitary_bm(int n, const sde::TimeGrid& grid, std::size_t n_paths, uint64_t seed,
                sde::UnConvention conv,
                const std::function<void(std::size_t, int, const alg::CMatrix&)>& observe,
                const alg::CMatrix& u0 = alg::CMatrix());

/// Torus eigenvalue SDE in the Trace convention:
///   d lambda_j = dB_j + (1/2) sum_{p != j} cot((lambda_j - lambda_p)/2) dt,
/// sub-stepped near collisions. Records the full vector at each node.
sde::SampleEnsemble unitary_eigen_sde(int n, const sde::TimeGrid& grid,
                                      std::size_t n_paths, uint64_t seed,
                                      const std::vector<double>& lambda0);

/// Karlin-McGregor density of lambda(t) (Trace convention):
///   e^{gamma t/2}/(n (2 pi)^n) (h(x)/h(l0)) sum_{K in Z_n} e^{-sum k^2 t/2n^2}
///   det(exp(i k_j (l0_j - x_k)/n)),
/// gamma = (n^3-n)/12, Z_n = {k_1 = ... = k_n mod n}, K-sum truncated below
/// 1e-14 Gaussian tail. (The monograph displays prefactor e^{gamma t}, which
/// does not normalize; its own proof yields e^{gamma t/2}.)
double unitary_eigen_density(int n, double t, const std::vector<double>& lambda0,
                             const std::vector<double>& x);

/// h(x) = prod_{j<k} sin((x_j - x_k)/2).
double torus_vandermonde(const std::vector<double>& x);

/// Stationary density of the gap v = lambda_2 - lambda_1 for n = 2:
/// sin^2(v/2)/pi on (0, 2 pi).
double unitary_gap_limit_density(double v);

/// Exact density of the gap v(t) for n = 2 (v solves dv = sqrt(2) dW +
/// cot(v/2) dt in the Trace convention): the KM density reduced over the
/// center of mass.
double unitary_gap_density(double t, double v0, double v);

} // namespace hypoheat::mat
