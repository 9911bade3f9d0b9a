#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace hypoheat::sfn {

/// Symbolic algebra for expressions of the form
///   sum_terms  c(1/sigma) * x^p * C(x)^q * S(x)^{-r} * exp(-x^2/(2 sigma)),
/// with (C,S) = (cos,sin) or (cosh,sinh), closed under the first-order
/// operators  a/S(x) * d/dx  used by the Millson-type recursions. Coefficients
/// are polynomials in nu = 1/sigma so one symbolic build serves every t.
class GaussTermExpr {
public:
    enum class Family { Trig, Hyp };

    explicit GaussTermExpr(Family fam) : family_(fam) {
        terms_[key(0, 0, 0)] = {1.0}; // the bare Gaussian
    }

    /// Replaces the expression by  a * (1/S(x)) * d/dx (expression).
    void apply_inv_s_derivative(double a);

    /// Replaces the expression by  a * (1/(S(x) C(x))) * d/dx (expression);
    /// note 1/sinh(2x) d/dx = (1/2) (1/(S C)) d/dx.
    void apply_inv_sc_derivative(double a);

    /// Replaces the expression by  a * d/dx (expression).
    void apply_derivative(double a);

    /// Single-shift evaluation at real x (hyperbolic kernels).
    double eval(double x, double sigma) const;

    /// Log-magnitude evaluation (value = sign * exp(log_abs)); stable far
    /// beyond the overflow/underflow range of eval().
    std::pair<double, double> eval_log(double x, double sigma) const; // (log_abs, sign)

    /// Complex-argument evaluation (analytic continuation).
    std::complex<double> eval(std::complex<double> x, double sigma) const;

    /// Lattice-summed evaluation sum_k expr(x - 2k pi) for Family::Trig; the
    /// trig factors are 2pi-periodic so only the monomial/Gaussian shift. The
    /// cutoff adapts until the next shell is below tail_tol relatively.
    std::complex<double> eval_wrapped(std::complex<double> x, double sigma,
                                      double tail_tol = 1e-16) const;

    std::size_t term_count() const { return terms_.size(); }

private:
    static int64_t key(int p, int q, int r) {
        return (static_cast<int64_t>(p) << 40) | (static_cast<int64_t>(q + 512) << 20) |
               static_cast<int64_t>(r + 512);
    }
    static void unkey(int64_t k, int& p, int& q, int& r) {
        p = static_cast<int>(k >> 40);
        q = static_cast<int>(((k >> 20) & 0xFFFFF)) - 512;
        r = static_cast<int>(k & 0xFFFFF) - 512;
    }

    using Poly = std::vector<double>; // coefficients in nu = 1/sigma
    Family family_;
    std::map<int64_t, Poly> terms_;

    void apply_deriv_impl(double a, int div_s, int div_c);
    static void add_to(Poly& dst, const Poly& src, double scale, int nu_shift);
    template <typename Scalar>
    Scalar eval_core(Scalar x, double sigma, Scalar gauss) const;
};

/// V(t,delta) = (4 pi t)^{-1/2} sum_k exp(-(delta-2k pi)^2/(4t)).
double theta_gaussian_sum(double t, double delta);

} // namespace hypoheat::sfn
