#pragma once

namespace hypoheat::sfn {

/// Jacobi polynomial P_m^{a,b}(x) by the three-term recurrence; a,b > -1.
double jacobi_poly(int m, double a, double b, double x);

/// Gegenbauer polynomial C_m^{nu}(x), nu > 0, by recurrence. x may lie outside
/// [-1,1] (analytic continuation used by the kernel evaluators).
double gegenbauer(int m, double nu, double x);

/// Chebyshev of the second kind, U_m(cos eta) = sin((m+1)eta)/sin(eta).
double chebyshev_u(int m, double x);

} // namespace hypoheat::sfn
