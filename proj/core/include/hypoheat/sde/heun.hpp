#pragma once

#include <functional>

namespace hypoheat::sde {

/// One Stratonovich predictor-corrector (Heun) step for a scalar SDE
/// dX = b(X) dt + sigma(X) o dB. Weak order 1; the midpoint evaluation of
/// sigma carries the Stratonovich correction implicitly.
template <typename Drift, typename Diffusion>
double heun_step(double x, double dt, double dB, const Drift& b, const Diffusion& sigma) {
    const double xp = x + b(x) * dt + sigma(x) * dB;      // predictor
    return x + 0.5 * (b(x) + b(xp)) * dt + 0.5 * (sigma(x) + sigma(xp)) * dB;
}

} // namespace hypoheat::sde
