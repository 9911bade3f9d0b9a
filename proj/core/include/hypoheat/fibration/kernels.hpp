#pragma once

#include "hypoheat/fibration/models.hpp"
#include "hypoheat/special/spectral_kernel.hpp"
#include "hypoheat/stats/report.hpp"

namespace hypoheat::fib {

enum class KernelForm { Spectral, Integral };

/// Horizontal heat kernel p_t at (r, fiber_coord), native FullGenerator
/// convention (the law of (r(t), theta(t)) has density p_{t/2} against the
/// model's cylindrical measure). fiber_coord is theta in [-pi, pi] for the
/// S^1 models and the SU(2)/S^7 radial angle eta in [0, pi] otherwise.
/// AdS models: the wrapped (periodic-fiber) kernel; see universal_cover for
/// the kernel on the cover.
double horizontal_kernel(const FibrationModel& model, KernelForm form, double t,
                         double r, double fiber_coord);

/// Universal-cover kernel of the AdS models (fiber coordinate on R).
double horizontal_kernel_cover(const FibrationModel& model, double t, double r,
                               double theta);

/// Cylindrical radial measure density of the model (against dr dtheta).
double cylindrical_measure(const FibrationModel& model, double r, double fiber_coord);

/// Exact k-sum for p_t(0, theta) on the n=1 complex Hopf fibration.
double p0theta_exact(double t, double theta);

/// Green function of the conformal sub-Laplacian -L + n^2 on the complex
/// Hopf fibration.
double green_function_hopf(int n, double r, double theta);

/// Berger-sphere kernel: the Hopf spectral series with the extra
/// e^{-k^2 lambda_B^2 t/2} factors (HalfGenerator convention as stated).
double berger_kernel(double lambda_b, int n, double t, double r, double theta);

/// L2 distance between the Berger kernel and its lambda_B -> infinity limit
/// (the CP^n radial kernel); monotone decay across the given ladder.
stats::TestReport homogenisation_check(int n, double t,
                                       const std::vector<double>& lambda_ladder);

enum class KernelRelation { QcSphere, TwistorCompact, TwistorAds };

/// Identity checks between kernels of different fibrations; returns the
/// relative error as the report statistic.
stats::TestReport kernel_relation_check(KernelRelation rel, int n, double t, double r,
                                        double fiber_coord, double tol);

} // namespace hypoheat::fib
