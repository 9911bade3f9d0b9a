#include "hypoheat/special/theta_sum.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace hypoheat::sfn {

void GaussTermExpr::add_to(Poly& dst, const Poly& src, double scale, int nu_shift) {
    if (dst.size() < src.size() + nu_shift) dst.resize(src.size() + nu_shift, 0.0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + nu_shift] += scale * src[i];
}

namespace {
struct DivShift {
    int s, c;
};
} // namespace

void GaussTermExpr::apply_inv_s_derivative(double a) { apply_deriv_impl(a, 1, 0); }
void GaussTermExpr::apply_inv_sc_derivative(double a) { apply_deriv_impl(a, 1, 1); }
void GaussTermExpr::apply_derivative(double a) { apply_deriv_impl(a, 0, 0); }

void GaussTermExpr::apply_deriv_impl(double a, int div_s, int div_c) {
    // d/dx [x^p C^q S^{-r} e^{-x^2 nu/2}]
    //   = p x^{p-1} C^q S^{-r} e  +  q (C'/C)(...)  - r (S'/S)(...)  - nu x (...)
    // then multiply by a / (S^{div_s} C^{div_c}).
    // Trig: C' = -S, S' = C. Hyp: C' = S, S' = C.
    const double csign = (family_ == Family::Trig) ? -1.0 : 1.0;
    std::map<int64_t, Poly> out;
    for (const auto& [k, poly] : terms_) {
        int p, q, r;
        unkey(k, p, q, r);
        const int qd = q - div_c, rd = r + div_s;
        if (p > 0) add_to(out[key(p - 1, qd, rd)], poly, a * p, 0);
        if (q != 0) add_to(out[key(p, qd - 1, rd - 1)], poly, a * q * csign, 0); // * C'/C
        if (r != 0) add_to(out[key(p, qd + 1, rd + 1)], poly, -a * r, 0);        // * S'/S
        add_to(out[key(p + 1, qd, rd)], poly, -a, 1); // the -nu x term
    }
    terms_ = std::move(out);
}

template <typename Scalar>
Scalar GaussTermExpr::eval_core(Scalar x, double sigma, Scalar gauss) const {
    const double nu = 1.0 / sigma;
    const Scalar c = (family_ == Family::Trig) ? cos(x) : cosh(x);
    const Scalar s = (family_ == Family::Trig) ? sin(x) : sinh(x);
    Scalar total{};
    for (const auto& [k, poly] : terms_) {
        int p, q, r;
        unkey(k, p, q, r);
        double coeff = 0.0;
        for (std::size_t i = poly.size(); i-- > 0;) coeff = coeff * nu + poly[i];
        Scalar v = Scalar(coeff);
        for (int i = 0; i < p; ++i) v *= x;
        if (q > 0)
            for (int i = 0; i < q; ++i) v *= c;
        else
            for (int i = 0; i < -q; ++i) v /= c;
        if (r > 0)
            for (int i = 0; i < r; ++i) v /= s;
        else
            for (int i = 0; i < -r; ++i) v *= s;
        total += v;
    }
    return total * gauss;
}

double GaussTermExpr::eval(double x, double sigma) const {
    const double g = std::exp(-x * x / (2.0 * sigma));
    return eval_core<double>(x, sigma, g);
}

std::pair<double, double> GaussTermExpr::eval_log(double x, double sigma) const {
    // polynomial part without the Gaussian, then add the exponent
    const double poly = eval_core<double>(x, sigma, 1.0);
    if (poly == 0.0) return {-std::numeric_limits<double>::infinity(), 1.0};
    return {std::log(std::abs(poly)) - x * x / (2.0 * sigma), poly > 0 ? 1.0 : -1.0};
}

std::complex<double> GaussTermExpr::eval(std::complex<double> x, double sigma) const {
    const std::complex<double> g = std::exp(-x * x / (2.0 * sigma));
    return eval_core<std::complex<double>>(x, sigma, g);
}

std::complex<double> GaussTermExpr::eval_wrapped(std::complex<double> x, double sigma,
                                                 double tail_tol) const {
    std::complex<double> total = eval(x, sigma);
    for (int k = 1; k < 64; ++k) {
        const std::complex<double> shell =
            eval(x - 2.0 * M_PI * k, sigma) + eval(x + 2.0 * M_PI * k, sigma);
        total += shell;
        if (std::abs(shell) < tail_tol * (std::abs(total) + 1e-300) && k >= 2) break;
    }
    return total;
}

double theta_gaussian_sum(double t, double delta) {
    const double sigma = 2.0 * t;
    double total = std::exp(-delta * delta / (2.0 * sigma));
    for (int k = 1; k < 64; ++k) {
        const double xm = delta - 2.0 * M_PI * k, xp = delta + 2.0 * M_PI * k;
        const double shell =
            std::exp(-xm * xm / (2.0 * sigma)) + std::exp(-xp * xp / (2.0 * sigma));
        total += shell;
        if (shell < 1e-17 * total && k >= 2) break;
    }
    return total / std::sqrt(4.0 * M_PI * t);
}

} // namespace hypoheat::sfn
