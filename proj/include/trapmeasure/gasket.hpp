#pragma once

#include "trapmeasure/interval.hpp"
#include "trapmeasure/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trapmeasure {

inline constexpr unsigned default_gasket_depth_cap = 8;

/// Partial Sierpinski gasket of the given depth: the union of 3^depth right
/// triangles of side 3^-depth anchored at the depth-n digit sums with digit
/// vectors (0,0), (2,0), (0,2).
class GasketSpec {
public:
    explicit GasketSpec(unsigned depth, unsigned depth_cap = default_gasket_depth_cap);
    [[nodiscard]] unsigned depth() const { return depth_; }

private:
    unsigned depth_;
};

/// Projection direction: an exact rational slope tan(theta) > 0, or a
/// floating angle reduced into [0, pi).
class Direction {
public:
    static Direction from_slope(Rational slope);
    static Direction from_angle(double radians);

    [[nodiscard]] bool exact() const { return slope_.has_value(); }
    [[nodiscard]] const Rational& slope() const { return *slope_; }
    [[nodiscard]] double angle() const { return angle_; }

private:
    Direction() = default;
    std::optional<Rational> slope_;
    double angle_ = 0.0;
};

struct FloatInterval {
    double lo;
    double hi;
};

struct Projection {
    /// Measure of the projected set in true projection coordinates.
    double measure = 0.0;
    /// Merged intervals in true projection coordinates.
    std::vector<FloatInterval> parts;
    /// Exact mode only: the projection divided by cos(theta), i.e. the set of
    /// values u + slope * v, and its exact measure.
    std::optional<IntervalUnion> scaled;
    std::optional<Rational> scaled_measure;
    /// cos(theta) in exact mode, 1 in numeric mode.
    double scale_factor = 1.0;
};

/// Lower-left corners of the generation-n triangles.
[[nodiscard]] std::vector<std::pair<Rational, Rational>> gasket_anchors(const GasketSpec& spec);

/// proj_theta(x, y) = x cos(theta) + y sin(theta) applied to every triangle.
[[nodiscard]] Projection project(const GasketSpec& spec, const Direction& dir);

/// Measure of the numeric projection at an angle; the fast path used by the
/// quadratures.
[[nodiscard]] double projection_measure(const GasketSpec& spec, double angle);

/// Midpoint estimate of (1/pi) * integral over [0, pi) of the projection
/// measure. Requires quad_points >= 16. Result does not depend on workers.
[[nodiscard]] double favard(const GasketSpec& spec, unsigned quad_points, unsigned workers = 1);

struct Lemma1Row {
    unsigned depth;
    Rational t;
    Rational lhs;   // measure of the depth-n slice set at t, exact
    double rhs;     // (1+t) * projection measure at atan((2-t)/(1+t))
    double ratio;   // lhs / rhs
    bool ok;        // lhs <= rhs + tolerance
};

/// Compares slice-set measures against scaled gasket projections.
[[nodiscard]] std::vector<Lemma1Row> lemma1_check(unsigned depth, std::span<const Rational> t_grid,
                                                  double tolerance = 1e-9);

struct Lemma2Row {
    double n;
    double integral;  // integral_0^n e^x x^-p dx
    double ratio;     // integral / (e^n n^-p)
    bool ok;          // finite and not above the previous row's ratio
};

/// Ratios of integral_0^n e^x x^-p dx to e^n n^-p; p must lie in (0, 1).
[[nodiscard]] std::vector<Lemma2Row> lemma2_check(double p, std::span<const double> n_values);

/// integral_0^n e^x x^-p dx, splitting at x = 1 and removing the endpoint
/// singularity with u = x^(1-p).
[[nodiscard]] double exp_power_integral(double n, double p);

/// Least-squares fit of log(value) = log(C) - p log(m).
struct DecayFit {
    std::vector<std::pair<double, double>> pairs;
    double C = 0.0;
    double p = 0.0;
    double residual = 0.0;  // root of the summed squared log-residuals
};

/// Needs at least 3 pairs with m >= 1, positive values, and two distinct m.
[[nodiscard]] DecayFit decay_fit(std::vector<std::pair<double, double>> pairs);

}  // namespace trapmeasure
