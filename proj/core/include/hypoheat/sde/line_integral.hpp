#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hypoheat::sde {

/// Cumulative Stratonovich line integral of a one-form along a discretized
/// path, midpoint rule: sum_k alpha((X_k + X_{k+1})/2) . (X_{k+1} - X_k).
/// `path` is row-major [node][dim]; `coeffs(x, out)` writes alpha_i(x).
inline std::vector<double> line_integral(
    const std::function<void(std::span<const double>, std::span<double>)>& coeffs,
    std::span<const double> path, std::size_t dim) {
    const std::size_t nodes = path.size() / dim;
    std::vector<double> out(nodes, 0.0);
    std::vector<double> mid(dim), a(dim);
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < nodes; ++k) {
        const double* x0 = path.data() + k * dim;
        const double* x1 = path.data() + (k + 1) * dim;
        for (std::size_t i = 0; i < dim; ++i) mid[i] = 0.5 * (x0[i] + x1[i]);
        coeffs(mid, a);
        for (std::size_t i = 0; i < dim; ++i) acc += a[i] * (x1[i] - x0[i]);
        out[k + 1] = acc;
    }
    return out;
}

} // namespace hypoheat::sde
