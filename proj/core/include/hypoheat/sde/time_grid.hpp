#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hypoheat::sde {

/// Strictly increasing time grid on [0, T]. Uniform by default; an optional
/// geometric refinement factor packs shorter steps near t = 0 (the first step
/// is `refine` times shorter than the last, decaying geometrically).
class TimeGrid {
public:
    TimeGrid(double horizon, int steps, double refine = 1.0)
        : horizon_(horizon), steps_(steps) {
        if (horizon <= 0 || steps < 1) throw std::invalid_argument("TimeGrid: bad arguments");
        nodes_.resize(steps + 1);
        if (refine <= 1.0) {
            for (int i = 0; i <= steps; ++i) nodes_[i] = horizon * i / steps;
        } else {
            const double q = std::pow(refine, 1.0 / (steps - 1));
            double dt = horizon * (q - 1.0) / (std::pow(q, steps) - 1.0);
            nodes_[0] = 0.0;
            for (int i = 1; i <= steps; ++i) {
                nodes_[i] = nodes_[i - 1] + dt;
                dt *= q;
            }
            nodes_[steps] = horizon;
        }
    }

    double horizon() const { return horizon_; }
    int steps() const { return steps_; }
    double node(int i) const { return nodes_[i]; }
    double dt(int i) const { return nodes_[i + 1] - nodes_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }

private:
    double horizon_;
    int steps_;
    std::vector<double> nodes_;
};

} // namespace hypoheat::sde
