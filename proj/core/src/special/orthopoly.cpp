#include "hypoheat/special/orthopoly.hpp"

#include <stdexcept>

namespace hypoheat::sfn {

double jacobi_poly(int m, double a, double b, double x) {
    if (m < 0) throw std::domain_error("jacobi_poly: m >= 0");
    if (m == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= m; ++k) {
        const double n = k;
        const double c = 2.0 * n + a + b;
        const double a1 = 2.0 * n * (n + a + b) * (c - 2.0);
        const double a2 = (c - 1.0) * (a * a - b * b);
        const double a3 = (c - 2.0) * (c - 1.0) * c;
        const double a4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c;
        const double next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
        pm1 = p;
        p = next;
    }
    return p;
}

double gegenbauer(int m, double nu, double x) {
    if (m < 0) throw std::domain_error("gegenbauer: m >= 0");
    if (m == 0) return 1.0;
    double cm1 = 1.0;
    double c = 2.0 * nu * x;
    for (int k = 2; k <= m; ++k) {
        const double next = (2.0 * x * (k + nu - 1.0) * c - (k + 2.0 * nu - 2.0) * cm1) / k;
        cm1 = c;
        c = next;
    }
    return c;
}

double chebyshev_u(int m, double x) {
    if (m < 0) throw std::domain_error("chebyshev_u: m >= 0");
    if (m == 0) return 1.0;
    double um1 = 1.0, u = 2.0 * x;
    for (int k = 2; k <= m; ++k) {
        const double next = 2.0 * x * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

} // namespace hypoheat::sfn
