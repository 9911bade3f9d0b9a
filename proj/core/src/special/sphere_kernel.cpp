#include "hypoheat/special/sphere_kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hypoheat/special/orthopoly.hpp"
#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/special/theta_sum.hpp"

namespace hypoheat::sfn {

namespace {

// Cached symbolic expression D^n applied to the Gaussian, D = -(1/(2 pi S)) d/dx.
const GaussTermExpr& odd_sphere_expr(int n) {
    static std::map<int, GaussTermExpr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        GaussTermExpr e(GaussTermExpr::Family::Trig);
        for (int i = 0; i < n; ++i) e.apply_inv_s_derivative(-1.0 / (2.0 * M_PI));
        it = cache.emplace(n, std::move(e)).first;
    }
    return it->second;
}

// Incremental Gegenbauer recurrence.
class GegSeq {
public:
    GegSeq(double nu, double x) : nu_(nu), x_(x) {}
    double next() {
        const double out = [&] {
            if (m_ == 0) return 1.0;
            if (m_ == 1) return 2.0 * nu_ * x_;
            return (2.0 * x_ * (m_ + nu_ - 1.0) * c_ - (m_ + 2.0 * nu_ - 2.0) * cm1_) / m_;
        }();
        cm1_ = c_;
        c_ = out;
        ++m_;
        return out;
    }

private:
    double nu_, x_;
    int m_ = 0;
    double cm1_ = 0.0, c_ = 0.0;
};

} // namespace

SeriesEval sphere_kernel_series(int d, double t, double delta, const TruncationPolicy& pol) {
    if (d < 2) throw std::domain_error("sphere_kernel_series: d >= 2");
    const double nu = 0.5 * (d - 1.0);
    const double pref =
        std::exp(std::lgamma(nu) - std::log(4.0) - 0.5 * (d + 1.0) * std::log(M_PI));
    // pref = Gamma((d-1)/2) / (4 pi^{(d+1)/2})
    GegSeq seq(nu, std::cos(delta));
    auto term = [&, d, t](int m) {
        const double c = seq.next();
        return (2.0 * m + d - 1.0) * std::exp(-m * (m + d - 1.0) * t) * c;
    };
    SeriesEval e = sum_spectral_series(term, pol);
    e.value *= pref;
    e.tail_bound *= pref;
    return e;
}

double sphere_kernel_theta(int d, double t, double delta) {
    if (d == 1) return theta_gaussian_sum(t, delta);
    if (d % 2 == 0) throw std::domain_error("sphere_kernel_theta: odd d only");
    const int n = (d - 1) / 2;
    const auto& expr = odd_sphere_expr(n);
    const std::complex<double> v = expr.eval_wrapped({delta, 0.0}, 2.0 * t);
    return std::exp(n * n * t) / std::sqrt(4.0 * M_PI * t) * v.real();
}

double sphere_kernel_continued(int d, double t, double cosh_u) {
    if (d % 2 == 0) throw std::domain_error("sphere_kernel_continued: odd d only");
    if (cosh_u < 1.0) throw std::domain_error("sphere_kernel_continued: argument < 1");
    const int n = (d - 1) / 2;
    const double u = std::acosh(cosh_u);
    const auto& expr = odd_sphere_expr(n);
    const std::complex<double> v = expr.eval_wrapped({0.0, u}, 2.0 * t);
    return std::exp(n * n * t) / std::sqrt(4.0 * M_PI * t) * v.real();
}

namespace {

// Gegenbauer-series continuation to x > 1: the series converges for any real
// argument (the Gaussian eigenvalue decay beats the e^{m u} polynomial
// growth) and is cancellation-free near the diagonal, where the theta route
// loses all precision to its 1/sinh^k poles.
double sphere_kernel_series_cont(int d, double t, double x) {
    const double nu = 0.5 * (d - 1.0);
    const double pref =
        std::exp(std::lgamma(nu) - std::log(4.0) - 0.5 * (d + 1.0) * std::log(M_PI));
    const double u = x > 1.0 ? std::acosh(x) : 0.0;
    // scaled three-term recurrence: the raw polynomial values overflow for
    // large continuation arguments even though decay * C_m stays finite
    double cm1 = 0.0, c = 1.0, scale_log = 0.0;
    double sum = 0.0;
    for (int m = 0; m < 100000; ++m) {
        if (m > 0) {
            const double next =
                m == 1 ? 2.0 * nu * x
                       : (2.0 * x * (m + nu - 1.0) * c - (m + 2.0 * nu - 2.0) * cm1) / m;
            cm1 = c;
            c = next;
            const double mag = std::abs(c);
            if (mag > 1e200) {
                cm1 /= mag;
                c /= mag;
                scale_log += std::log(mag);
            }
        }
        const double term = (2.0 * m + d - 1.0) *
                            std::exp(-m * (m + d - 1.0) * t + scale_log) * c;
        sum += term;
        // terms decay once the Gaussian wins over e^{m u}
        if (m > 3 && m * t > u + 20.0 / (m + 1.0) && std::abs(term) < 1e-16 * std::abs(sum))
            break;
    }
    return pref * sum;
}

} // namespace

double sphere_kernel_x(int d, double t, double x) {
    // the Gegenbauer route is cancellation-free on both sides of x = 1
    // (the theta route loses precision near the diagonal to its 1/sin^k,
    // 1/sinh^k poles; it remains available for the dual-representation tests)
    return sphere_kernel_series_cont(d, t, x);
}

double sphere_radial_measure(int d, double r) {
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d) *
           std::pow(std::sin(r), d - 1.0);
}

} // namespace hypoheat::sfn
