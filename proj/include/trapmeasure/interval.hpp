#pragma once

#include "trapmeasure/rational.hpp"

#include <span>
#include <vector>

namespace trapmeasure {

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical union of closed intervals: sorted by lo, pairwise separated by
/// strict gaps. Construct through normalize().
class IntervalUnion {
public:
    IntervalUnion() = default;

    [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] std::size_t size() const { return parts_.size(); }
    /// Total length, exact.
    [[nodiscard]] const Rational& measure() const { return measure_; }
    [[nodiscard]] bool contains(const Rational& x) const;

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.parts_ == b.parts_;
    }

private:
    friend IntervalUnion normalize(std::vector<Interval> parts);

    std::vector<Interval> parts_;
    Rational measure_;
};

/// Sorts and merges; touching or overlapping intervals collapse into one part.
/// Throws std::invalid_argument if some interval has lo > hi.
[[nodiscard]] IntervalUnion normalize(std::vector<Interval> parts);

[[nodiscard]] inline const Rational& measure(const IntervalUnion& u) { return u.measure(); }

}  // namespace trapmeasure
