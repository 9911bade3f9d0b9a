#pragma once

#include <functional>
#include <vector>

#include "hypoheat/algebra/cmatrix.hpp"
#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/sde/time_grid.hpp"
#include "hypoheat/stats/laws.hpp"

namespace hypoheat::mat {

/// Complex (hyperbolic) Grassmannian flows through the (pseudo-)unitary group:
/// U(t) on U(n) or U(n-k,k) in the monograph's half-trace convention, blocks
///   U = [[Y, X], [W, Z]] (hyperbolic) / [[X, Y], [Z, V]] (compact), and the
/// affine coordinate w = X Z^{-1}, J = w* w.
struct GrassmannModel {
    int n = 3, k = 1;
    bool hyperbolic = false;
    std::vector<double> lambda0; // initial eigenvalues of J (size k, distinct)

    std::string tag() const;
};

GrassmannModel make_grassmann(int n, int k, bool hyperbolic,
                              std::vector<double> lambda0);

/// Builds the Stiefel frame (X0; Z0) realizing J(0) = diag(lambda0):
/// compact X0 = w0 (I + w0* w0)^{-1/2}, hyperbolic with (I - w0* w0).
void initial_frame(const GrassmannModel& m, alg::CMatrix& x0, alg::CMatrix& z0);

struct GrassmannRecord {
    double t = 0.0;
    std::vector<double> eigenvalues;    // of J, ascending
    double det_z_modulus = 1.0;
    double det_z_argument = 0.0;        // unwound
    double trace_eta = 0.0;             // (1/i) int tr(eta), the area
    double int_tr_j = 0.0;              // int_0^t tr J ds
    double min_gap = 0.0;
    double frame_defect = 0.0;          // |X*X +- Z*Z -+ I|
};

/// Per-path observables of the full matrix flow at the requested nodes.
/// observe(path, record_index, record).
void grassmann_bm(const GrassmannModel& model, const sde::TimeGrid& grid,
                  std::size_t n_paths, uint64_t seed,
                  const std::vector<int>& record_nodes,
                  const std::function<void(std::size_t, std::size_t,
                                           const GrassmannRecord&)>& observe);

/// Autonomous matrix Jacobi SDE for J (cross-check of the projection route);
/// records the ascending eigenvalues at the terminal node.
sde::SampleEnsemble matrix_jacobi_sde(const GrassmannModel& model,
                                      const sde::TimeGrid& grid, std::size_t n_paths,
                                      uint64_t seed);

/// Eigenvalue SDE route; records ascending eigenvalues + min gap.
sde::SampleEnsemble eigen_jacobi_sde(const GrassmannModel& model,
                                     const sde::TimeGrid& grid, std::size_t n_paths,
                                     uint64_t seed);

/// Karlin-McGregor density of rho(t) (rho_i = (1-lambda_i)/(1+lambda_i),
/// ascending) on the simplex Delta_k, compact models.
double km_eigen_density(const GrassmannModel& model, double t,
                        const std::vector<double>& x);

/// Coulomb-gas limit density c prod (x_i-x_j)^2 prod (1-x_i)^{n-2k} on
/// Delta_k (ascending), with the Selberg normalization.
double grassmann_limit_density(int n, int k, const std::vector<double>& x);
double grassmann_limit_log_constant(int n, int k);

/// Zonal eigenfunction Phi_{m}(rho) and its L_{n,k} eigenvalue.
std::pair<double, double> zonal_eigenfunction(int n, int k,
                                              const std::vector<int>& m,
                                              const std::vector<double>& rho);

/// Generator L_{n,k} applied to f by central differences (oracle helper).
double apply_lnk(int n, int k, const std::function<double(const std::vector<double>&)>& f,
                 const std::vector<double>& rho, double h = 1e-4);

/// Closed-form Laplace transform E[e^{-2 alpha^2 int_0^t tr J ds}] for the
/// compact model, k in {1,2}.
double trace_laplace_compact(const GrassmannModel& model, double alpha, double t);

/// Limit descriptors.
stats::LawDescriptor trace_limit_compact(int n, int k);     // t^{-2} int tr J
stats::LawDescriptor area_limit(const GrassmannModel& m);   // area scaling law
stats::LawDescriptor winding_limit(const GrassmannModel& m);

} // namespace hypoheat::mat
