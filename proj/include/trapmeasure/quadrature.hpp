#pragma once

#include <functional>

namespace trapmeasure {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive Simpson on [a, b]. Subintervals are accepted once the Richardson
/// error estimate drops below tol (scaled by the interval's share of [a, b]);
/// a branch that reaches max_depth is accepted and marks the result
/// unconverged.
[[nodiscard]] QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                                double tol, int max_depth = 50);

}  // namespace trapmeasure
