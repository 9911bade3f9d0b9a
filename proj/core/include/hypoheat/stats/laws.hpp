#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hypoheat/sde/rng.hpp"

namespace hypoheat::stats {

/// Reference limit law with exact CDF/CF evaluators and a sampler. For
/// multivariate isotropic families the CDF/sampler refer to the stated
/// 1-D reduction (component or radial norm, per `cdf_kind`).
struct LawDescriptor {
    enum class Family {
        Cauchy,            // param c
        Gaussian,          // mean, variance (per component)
        IsotropicCauchy,   // dim d, param c
        RelativisticCauchy,// dim 3, param y
        BetaProduct,       // sqrt(prod Beta(a_j, b_j)) -- the modulus rho_inf
        HittingTime,       // level a: first hit of a by |BM|
        CustomCf           // isotropic law given by its CF (e.g. HH1 limit)
    };
    Family family = Family::Gaussian;
    double p1 = 0.0, p2 = 1.0;
    int dim = 1;
    std::vector<std::pair<double, double>> beta_params;
    std::function<double(double)> custom_cf; // radial CF phi(|lambda|)
    std::string name;
};

LawDescriptor cauchy_law(double c);
LawDescriptor gaussian_law(double mean, double variance, int dim = 1);
LawDescriptor isotropic_cauchy_law(int dim, double c);
LawDescriptor relativistic_cauchy_law(double y);
LawDescriptor beta_product_law(int k, int n_minus_k); // prod_{j=1..k} Beta(j, n-k)
LawDescriptor hitting_time_law(double level);
LawDescriptor custom_cf_law(std::function<double(double)> cf, int dim, std::string name);

struct ReferenceLaw {
    std::function<double(double)> cdf;      // 1-D reduction CDF
    std::function<double(double)> cf;       // CF of the 1-D reduction (real part)
    std::function<double(sde::Rng&)> sample; // 1-D reduction sampler
    std::string name;
};

/// Exact evaluators for a descriptor; `component` selects the 1-D reduction
/// for multivariate families: a single coordinate (isotropy makes them
/// exchangeable).
ReferenceLaw reference_law(const LawDescriptor& law);

/// Radial-norm reduction |X| for the multivariate families (isotropy test).
ReferenceLaw reference_law_radial(const LawDescriptor& law);

/// Mellin moment E[rho_inf^s] of the BetaProduct law (normalized, i.e. the
/// Gamma-ratio product formula).
double beta_product_mellin(int k, int n_minus_k, double s);

double normal_cdf(double x);

} // namespace hypoheat::stats
