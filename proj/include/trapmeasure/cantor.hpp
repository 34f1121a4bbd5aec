#pragma once

#include "trapmeasure/interval.hpp"
#include "trapmeasure/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace trapmeasure {

inline constexpr unsigned default_cantor_depth_cap = 12;

/// Digit set D_n(a,b,c) = { sum_{k=1..n} x_k / 3^k : x_k in {a,b,c} }.
/// Digits must lie in [0, 2] so that each generation nests in the previous.
class DigitSetSpec {
public:
    DigitSetSpec(unsigned depth, std::array<Rational, 3> digits);

    [[nodiscard]] unsigned depth() const { return depth_; }
    [[nodiscard]] const std::array<Rational, 3>& digits() const { return digits_; }

private:
    unsigned depth_;
    std::array<Rational, 3> digits_;
};

/// Sorted distinct depth-n digit sums. Throws std::out_of_range above the cap.
[[nodiscard]] std::vector<Rational> anchor_points(const DigitSetSpec& spec,
                                                  unsigned depth_cap = default_cantor_depth_cap);

/// Union of [x, x + 3^-n] over the anchors of spec.
[[nodiscard]] IntervalUnion partial_cantor(const DigitSetSpec& spec,
                                           unsigned depth_cap = default_cantor_depth_cap);

/// Depth-n slice set: partial_cantor with digits {0, 1+t, 2-t}; t in [0, 1].
[[nodiscard]] IntervalUnion slice_set(unsigned depth, const Rational& t,
                                      unsigned depth_cap = default_cantor_depth_cap);

/// Measure of the limit set with digits {0, 1, t}: 1/q when t = p/q in lowest
/// terms has p + q divisible by 3, else 0. Requires t >= 0.
[[nodiscard]] Rational cantor_measure_closed(const Rational& t);

/// Measure of the limit slice with digits {0, 1+t, 2-t}, obtained by scaling
/// the digit set {0, 1, (2-t)/(1+t)} by 1+t. Requires t in [0, 1].
[[nodiscard]] Rational slice_measure_closed(const Rational& t);

struct DigitSwapResult {
    Rational value;
    /// Input 1 (only expansion 0.222...) or an image ending in repeating 2s;
    /// such points are where the swap map fails to be injective.
    bool boundary_case = false;
    /// First `precision` base-3 digits of the image after the radix point.
    std::string image_digits;
};

/// Exchanges digits 1 and 2 in the canonical base-3 expansion of x in [0, 1]
/// (the expansion that does not end in repeating 2s).
[[nodiscard]] DigitSwapResult digit_swap_real(const Rational& x, unsigned precision = 24);

}  // namespace trapmeasure
