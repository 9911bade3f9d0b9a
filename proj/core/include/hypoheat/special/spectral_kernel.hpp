#pragma once

#include <functional>
#include <stdexcept>

namespace hypoheat::sfn {

/// Which operator a kernel's time parameter refers to. The monograph mixes
/// e^{tL} and e^{t L/2} normalizations; every evaluator in this library
/// records its native convention and cross-checks convert through it:
/// K^{Full}_t == K^{Half}_{2t}.
enum class TimeConvention { FullGenerator, HalfGenerator };

inline double to_native_time(double t, TimeConvention given, TimeConvention native) {
    if (given == native) return t;
    // caller time t in HalfGenerator units equals native FullGenerator time t/2
    return given == TimeConvention::HalfGenerator ? 0.5 * t : 2.0 * t;
}

struct TruncationPolicy {
    double eps_tail = 1e-12;
    int m_max = 4000;
    int consecutive = 5;
};

struct SeriesEval {
    double value = 0.0;
    double tail_bound = 0.0;
    bool converged = false;
    int terms = 0;

    double require() const {
        if (!converged) throw std::runtime_error("spectral series truncation failure");
        return value;
    }
};

/// Sums term(m), m = 0,1,..., stopping once `consecutive` successive terms are
/// each below eps_tail * |partial sum|; reports a tail bound (the last shell)
/// or a truncation failure at m_max.
SeriesEval sum_spectral_series(const std::function<double(int)>& term,
                               const TruncationPolicy& pol = {});

/// One-parameter spectral kernel: term(m, t) already evaluated at the target
/// point; carries truncation policy and native time convention.
class SpectralKernel {
public:
    SpectralKernel(std::function<double(int, double)> term, TruncationPolicy pol,
                   TimeConvention native)
        : term_(std::move(term)), pol_(pol), native_(native) {}

    SeriesEval value(double t, TimeConvention given) const {
        const double tn = to_native_time(t, given, native_);
        return sum_spectral_series([&](int m) { return term_(m, tn); }, pol_);
    }
    SeriesEval value(double t) const { return value(t, native_); }

    TimeConvention native_convention() const { return native_; }

private:
    std::function<double(int, double)> term_;
    TruncationPolicy pol_;
    TimeConvention native_;
};

} // namespace hypoheat::sfn
