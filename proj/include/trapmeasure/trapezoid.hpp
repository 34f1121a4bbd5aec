#pragma once

#include "trapmeasure/interval.hpp"
#include "trapmeasure/permutation.hpp"
#include "trapmeasure/profile.hpp"
#include "trapmeasure/rational.hpp"

#include <utility>

namespace trapmeasure {

/// Union of n parallelograms of width 1/n: parallelogram j joins the bottom
/// interval [(j-1)/n, j/n] x {0} to the top interval [(k-1)/n, k/n] x {1},
/// with k = sigma(j).
class TrapezoidSpec {
public:
    explicit TrapezoidSpec(Permutation sigma) : sigma_(std::move(sigma)) {}
    TrapezoidSpec(std::size_t n, Permutation sigma);

    [[nodiscard]] std::size_t n() const { return sigma_.size(); }
    [[nodiscard]] const Permutation& sigma() const { return sigma_; }

private:
    Permutation sigma_;
};

/// One parallelogram of the family; its slice at height y is
/// [(j-1+(k-j)y)/n, (j+(k-j)y)/n].
struct Parallelogram {
    Index j;
    Index k;
    Index n;

    [[nodiscard]] Interval slice(const Rational& y) const;
};

/// Horizontal cross-section at height y in [0, 1].
[[nodiscard]] IntervalUnion slice(const TrapezoidSpec& spec, const Rational& y);

/// Cross-section measure as a function of height, sampled at every height
/// where two interval endpoints meet.
[[nodiscard]] PiecewiseLinearProfile slice_profile(const TrapezoidSpec& spec);

/// Exact two-dimensional measure, in [1/n, 1].
[[nodiscard]] Rational area(const TrapezoidSpec& spec);

/// Midpoint-rule estimate of the area from `samples` exact slices.
[[nodiscard]] double area_oracle(const TrapezoidSpec& spec, unsigned samples);

struct WeightedSum {
    Rational lhs;  // area of the composite construction for n
    Rational rhs;  // (1/n) * sum_j x_j 3^j area(T^{3^j}, digit swap)
};

/// Both sides of the block decomposition identity for composite_sigma(n).
[[nodiscard]] WeightedSum weighted_sum_identity(std::size_t n);

}  // namespace trapmeasure
