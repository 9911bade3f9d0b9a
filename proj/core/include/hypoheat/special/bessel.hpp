#pragma once

namespace hypoheat::sfn {

/// log I_nu(x), nu >= 0, x >= 0. Ascending series with streaming rescaling for
/// x <= 30 (and whenever nu is large relative to x), large-argument expansion
/// otherwise. Safe for arguments far beyond the overflow range of I itself.
double log_besseli(double nu, double x);

/// I_nu(x); overflows to +inf for x beyond ~700 (use log_besseli there).
double besseli(double nu, double x);

/// K_nu(x), nu >= 0, x > 0.
double besselk(double nu, double x);

/// log K_nu(x), usable when K underflows.
double log_besselk(double nu, double x);

} // namespace hypoheat::sfn
