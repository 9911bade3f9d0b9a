#include "hypoheat/flat/densities.hpp"

#include <cmath>
#include <vector>

#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::flat {

double planar_area_density(double t, double s, bool conditioned_on_loop) {
    const double z = M_PI * s / (2.0 * t);
    const double sech = 1.0 / std::cosh(z);
    if (conditioned_on_loop) return M_PI / (4.0 * t) * sech * sech;
    return 0.5 / t * sech;
}

double dirichlet_beta(double s) {
    // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k,
    // a_k = (2k+1)^{-s}
    const int n = 50;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(2.0 * k + 1.0, -s);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

double area_moment(double alpha, double t) {
    return std::pow(2.0, alpha + 2.0) * std::tgamma(1.0 + alpha) /
           std::pow(M_PI, 1.0 + alpha) * dirichlet_beta(1.0 + alpha) * std::pow(t, alpha);
}

double quat_area_density(int n, double t, double phi_norm) {
    // (2^{2n-1}/(32 pi^2 t^3)) int_{-1}^{1} du int_0^inf y^{n-1+iuz} ln^2 y
    //   /(1+y)^{2n} dy, z = |phi|/(2t); v-substitution y = e^w
    const double z = phi_norm / (2.0 * t);
    auto inner = [&](double uz) {
        auto f = [&](double w) {
            return std::exp(n * w) * std::cos(uz * w) * w * w /
                   std::pow(1.0 + std::exp(w), 2.0 * n);
        };
        // integrand decays like e^{-n|w|} w^2; symmetric domain
        const double W = 60.0 / n + 10.0;
        return sfn::integrate(f, -W, W, 1e-12, 16).value;
    };
    // u-integral over (-1,1); even in u
    auto g = [&](double u) { return inner(u * z); };
    const double outer = 2.0 * sfn::integrate(g, 0.0, 1.0, 1e-11, 14).value;
    return std::pow(2.0, 2.0 * n - 1.0) / (32.0 * M_PI * M_PI * t * t * t) * outer;
}

double laguerre_trace_cf(int n, int m, double lambda, double t) {
    return std::pow(1.0 / std::cosh(lambda * t), n * m);
}

} // namespace hypoheat::flat
