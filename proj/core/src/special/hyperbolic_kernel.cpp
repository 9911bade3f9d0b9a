#include "hypoheat/special/hyperbolic_kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/special/theta_sum.hpp"

namespace hypoheat::sfn {

namespace {

// (-(1/sinh) d/dx)^m applied to the Gaussian.
const GaussTermExpr& millson_expr(int m) {
    static std::map<int, GaussTermExpr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) {
        GaussTermExpr e(GaussTermExpr::Family::Hyp);
        for (int i = 0; i < m; ++i) e.apply_inv_s_derivative(-1.0);
        it = cache.emplace(m, std::move(e)).first;
    }
    return it->second;
}

// (-d/dx)(-(1/sinh) d/dx)^m applied to the Gaussian (even-dimension layer).
const GaussTermExpr& millson_even_expr(int m) {
    static std::map<int, GaussTermExpr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it == cache.end()) {
        GaussTermExpr e(GaussTermExpr::Family::Hyp);
        for (int i = 0; i < m; ++i) e.apply_inv_s_derivative(-1.0);
        e.apply_derivative(-1.0);
        it = cache.emplace(m, std::move(e)).first;
    }
    return it->second;
}

// (-d/dx)(-(1/sinh 2x) d/dx)^j (-(1/sinh x) d/dx)^m applied to the Gaussian;
// 1/sinh(2x) = (1/2) / (sinh x cosh x). Used by the CH^n/HH^n kernels.
GaussTermExpr corner_expr(int m, int j) {
    GaussTermExpr e(GaussTermExpr::Family::Hyp);
    for (int i = 0; i < m; ++i) e.apply_inv_s_derivative(-1.0);
    for (int i = 0; i < j; ++i) e.apply_inv_sc_derivative(-0.5);
    e.apply_derivative(-1.0);
    return e;
}

// Integral of expr(theta) e^{-theta^2/(2t)} / sqrt(cosh(c*theta) - cosh(c*r))
// over theta in (r, inf). Substituting theta = r + s^2 and using
//   cosh(c th) - cosh(c r) = 2 sinh(c(r + s^2/2)) sinh(c s^2/2)
// removes the endpoint square root exactly (regular also at r = 0).
double edge_integral(const GaussTermExpr& expr, double c, double t, double r) {
    auto sinhc = [](double z) { return z < 1e-5 ? 1.0 + z * z / 6.0 : std::sinh(z) / z; };
    auto f = [&](double s) {
        const double th = r + s * s;
        const double g = expr.eval(th, t);
        const double den =
            c * std::sinh(c * (r + 0.5 * s * s)) * sinhc(0.5 * c * s * s);
        return 2.0 * g / std::sqrt(den);
    };
    const double smax = std::sqrt(12.0 * std::sqrt(t) + 6.0 * t + 1.0);
    QuadResult q = integrate(f, 0.0, smax, 1e-12, 18);
    return q.value;
}

} // namespace

double hyperbolic_kernel(int d, double t, double r, HyperbolicMethod method) {
    if (d < 2) throw std::domain_error("hyperbolic_kernel: d >= 2");
    if (method == HyperbolicMethod::Gruet) {
        const double np1h = 0.5 * (d + 1.0);
        auto g = [&](double rho) {
            return std::exp((M_PI * M_PI - rho * rho) / (2.0 * t)) * std::sinh(rho) *
                   std::sin(M_PI * rho / t) /
                   std::pow(std::cosh(rho) + std::cosh(r), np1h);
        };
        const double tail = std::sqrt(2.0 * t * 45.0) + 4.0 * t + M_PI;
        QuadResult q = integrate_oscillatory_halfperiods(g, 2.0 * t, tail, 1e-7);
        if (!q.converged)
            throw std::runtime_error("hyperbolic_kernel: Gruet quadrature non-convergence");
        const double pref = std::exp(-0.25 * (d - 1.0) * (d - 1.0) * t / 2.0) *
                            std::tgamma(0.5 * (d + 1.0)) /
                            (M_PI * std::pow(2.0 * M_PI, 0.5 * d) * std::sqrt(t));
        return pref * q.value;
    }
    if (d % 2 == 1) {
        const int m = (d - 1) / 2;
        const double pref =
            std::exp(-0.5 * m * m * t) / (std::pow(2.0 * M_PI, m) * std::sqrt(2.0 * M_PI * t));
        return pref * millson_expr(m).eval(r, t);
    }
    const int m = (d - 2) / 2;
    const double pref = std::exp(-0.125 * (2.0 * m + 1.0) * (2.0 * m + 1.0) * t) *
                        std::sqrt(2.0) /
                        (std::sqrt(2.0 * M_PI * t) * std::pow(2.0 * M_PI, m + 1));
    return pref * edge_integral(millson_even_expr(m), 1.0, t, r);
}

std::pair<double, double> hyperbolic_kernel_log(int d, double t, double r) {
    if (d % 2 == 0) throw std::domain_error("hyperbolic_kernel_log: odd d only");
    const int m = (d - 1) / 2;
    const double logpref = -0.5 * m * m * t - m * std::log(2.0 * M_PI) -
                           0.5 * std::log(2.0 * M_PI * t);
    auto [la, sg] = millson_expr(m).eval_log(r, t);
    return {logpref + la, sg};
}

double ch_kernel(int n, double t, double r) {
    static std::map<int, GaussTermExpr> cache;
    static std::mutex mtx;
    const GaussTermExpr* expr;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, corner_expr(n - 1, 0)).first;
        expr = &it->second;
    }
    const double pref =
        2.0 * std::exp(-0.5 * n * n * t) / (std::sqrt(M_PI * t) * std::pow(2.0 * M_PI, n));
    return pref * edge_integral(*expr, 2.0, t, r);
}

double hh_kernel(int n, double t, double r) {
    static std::map<int, GaussTermExpr> cache;
    static std::mutex mtx;
    const GaussTermExpr* expr;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, corner_expr(2 * (n - 1), 1)).first;
        expr = &it->second;
    }
    const double pref = 4.0 * std::exp(-0.5 * (2.0 * n + 1.0) * (2.0 * n + 1.0) * t) /
                        (std::sqrt(M_PI * t) * std::pow(2.0 * M_PI, 2 * n));
    return pref * edge_integral(*expr, 2.0, t, r);
}

double hyperbolic_radial_measure(int d, double r) {
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d) *
           std::pow(std::sinh(r), d - 1.0);
}

double ch_radial_measure(int n, double r) {
    return std::pow(M_PI, n) / std::tgamma(static_cast<double>(n)) *
           std::pow(std::sinh(r), 2.0 * n - 2.0) * std::sinh(2.0 * r);
}

double hh_radial_measure(int n, double r) {
    return std::pow(M_PI, 2.0 * n) / (4.0 * std::tgamma(2.0 * n)) *
           std::pow(std::sinh(r), 4.0 * n - 4.0) * std::pow(std::sinh(2.0 * r), 3.0);
}

double cp_radial_measure(int n, double r) {
    return std::pow(M_PI, n) / std::tgamma(static_cast<double>(n)) *
           std::pow(std::sin(r), 2.0 * n - 2.0) * std::sin(2.0 * r);
}

double hp_radial_measure(int n, double r) {
    return std::pow(M_PI, 2.0 * n) / (4.0 * std::tgamma(2.0 * n)) *
           std::pow(std::sin(r), 4.0 * n - 4.0) * std::pow(std::sin(2.0 * r), 3.0);
}

double op1_radial_measure(double r) {
    return std::pow(M_PI, 4.0) / (3.0 * 128.0) * std::pow(std::sin(2.0 * r), 7.0);
}

double oh1_radial_measure(double r) {
    return std::pow(M_PI, 4.0) / (3.0 * 128.0) * std::pow(std::sinh(2.0 * r), 7.0);
}

} // namespace hypoheat::sfn
