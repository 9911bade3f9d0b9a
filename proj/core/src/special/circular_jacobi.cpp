#include "hypoheat/special/circular_jacobi.hpp"

#include <cmath>
#include <vector>

#include "hypoheat/special/orthopoly.hpp"

namespace hypoheat::sfn {

namespace {

// Incremental three-term recurrence for P_m^{a,b}(x).
class JacobiSeq {
public:
    JacobiSeq(double a, double b, double x) : a_(a), b_(b), x_(x) {}
    double next() {
        const double out = [&] {
            if (m_ == 0) return 1.0;
            if (m_ == 1) return 0.5 * (a_ - b_) + 0.5 * (a_ + b_ + 2.0) * x_;
            const double n = m_;
            const double c = 2.0 * n + a_ + b_;
            const double a1 = 2.0 * n * (n + a_ + b_) * (c - 2.0);
            const double a2 = (c - 1.0) * (a_ * a_ - b_ * b_);
            const double a3 = (c - 2.0) * (c - 1.0) * c;
            const double a4 = 2.0 * (n + a_ - 1.0) * (n + b_ - 1.0) * c;
            return ((a2 + a3 * x_) * p_ - a4 * pm1_) / a1;
        }();
        pm1_ = p_;
        p_ = out;
        ++m_;
        return out;
    }

private:
    double a_, b_, x_;
    int m_ = 0;
    double pm1_ = 0.0, p_ = 0.0;
};

} // namespace

SeriesEval sum_spectral_series(const std::function<double(int)>& term,
                               const TruncationPolicy& pol) {
    SeriesEval out;
    double sum = 0.0;
    int small_run = 0;
    int m = 0;
    double last = 0.0;
    for (; m < pol.m_max; ++m) {
        last = term(m);
        sum += last;
        if (std::abs(last) < pol.eps_tail * std::max(std::abs(sum), 1e-300)) {
            if (++small_run >= pol.consecutive) {
                ++m;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.value = sum;
    out.terms = m;
    out.tail_bound = std::abs(last) * pol.consecutive;
    out.converged = small_run >= pol.consecutive;
    return out;
}

SeriesEval circular_jacobi_kernel(double a, double b, double t, double r0, double r,
                                  const TruncationPolicy& pol) {
    const double x0 = std::cos(2.0 * r0), x = std::cos(2.0 * r);
    const double w = 2.0 * std::pow(std::cos(r), 2.0 * b + 1.0) *
                     std::pow(std::sin(r), 2.0 * a + 1.0);
    JacobiSeq s0(a, b, x0), s(a, b, x);
    auto term = [&, a, b, t](int m) {
        const double p0 = s0.next(), p = s.next();
        const double lognorm = std::lgamma(m + a + b + 1.0) + std::lgamma(m + 1.0) -
                               std::lgamma(m + a + 1.0) - std::lgamma(m + b + 1.0);
        const double lam = 2.0 * m * (m + a + b + 1.0);
        return (2.0 * m + a + b + 1.0) * std::exp(lognorm - lam * t) * p0 * p;
    };
    SeriesEval e = sum_spectral_series(term, pol);
    e.value *= w;
    e.tail_bound *= std::abs(w);
    return e;
}

SeriesEval circular_jacobi_kernel0(double a, double b, double t, double r,
                                   const TruncationPolicy& pol) {
    const double x = std::cos(2.0 * r);
    const double w = 2.0 * std::pow(std::cos(r), 2.0 * b + 1.0) *
                     std::pow(std::sin(r), 2.0 * a + 1.0);
    JacobiSeq s(a, b, x);
    auto term = [&, a, b, t](int m) {
        const double p = s.next();
        const double lognorm = std::lgamma(m + a + b + 1.0) - std::lgamma(m + b + 1.0) -
                               std::lgamma(a + 1.0);
        const double lam = 2.0 * m * (m + a + b + 1.0);
        return (2.0 * m + a + b + 1.0) * std::exp(lognorm - lam * t) * p;
    };
    SeriesEval e = sum_spectral_series(term, pol);
    e.value *= w;
    e.tail_bound *= std::abs(w);
    return e;
}

SeriesEval jacobi_interval_kernel(double a, double b, double t, double u, double v,
                                  const TruncationPolicy& pol) {
    const double w = std::pow(1.0 + v, b) * std::pow(1.0 - v, a) /
                     std::pow(2.0, a + b + 1.0);
    JacobiSeq su(a, b, u), sv(a, b, v);
    auto term = [&, a, b, t](int m) {
        const double pu = su.next(), pv = sv.next();
        const double lognorm = std::lgamma(m + a + b + 1.0) + std::lgamma(m + 1.0) -
                               std::lgamma(m + a + 1.0) - std::lgamma(m + b + 1.0);
        const double lam = 2.0 * m * (m + a + b + 1.0);
        return (2.0 * m + a + b + 1.0) * std::exp(lognorm - lam * t) * pu * pv;
    };
    SeriesEval e = sum_spectral_series(term, pol);
    e.value *= w;
    e.tail_bound *= std::abs(w);
    return e;
}

double circular_jacobi_stationary(double a, double b, double r) {
    const double logc = std::lgamma(a + b + 2.0) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0);
    return 2.0 * std::exp(logc) * std::pow(std::cos(r), 2.0 * b + 1.0) *
           std::pow(std::sin(r), 2.0 * a + 1.0);
}

} // namespace hypoheat::sfn
