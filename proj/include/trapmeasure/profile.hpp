#pragma once

#include "trapmeasure/rational.hpp"

#include <vector>

namespace trapmeasure {

struct Breakpoint {
    Rational y;
    Rational value;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on [0, 1], stored by its values at
/// strictly increasing breakpoints that start at 0 and end at 1.
class PiecewiseLinearProfile {
public:
    /// Throws std::invalid_argument unless the breakpoints are strictly
    /// increasing and span exactly [0, 1].
    explicit PiecewiseLinearProfile(std::vector<Breakpoint> breakpoints);

    [[nodiscard]] const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    /// Linear interpolation; y must lie in [0, 1].
    [[nodiscard]] Rational evaluate(const Rational& y) const;

private:
    std::vector<Breakpoint> breakpoints_;
};

/// Exact integral over [0, 1]: sum of (y[i+1]-y[i]) * (v[i]+v[i+1]) / 2.
[[nodiscard]] Rational integrate_plp(const PiecewiseLinearProfile& f);

}  // namespace trapmeasure
