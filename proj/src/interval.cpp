#include "trapmeasure/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace trapmeasure {

IntervalUnion normalize(std::vector<Interval> parts) {
    for (const auto& iv : parts) {
        if (iv.hi < iv.lo)
            throw std::invalid_argument("interval [" + iv.lo.to_string() + ", " + iv.hi.to_string() +
                                        "] has lo > hi");
    }
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    IntervalUnion out;
    for (auto& iv : parts) {
        if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
            if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = std::move(iv.hi);
        } else {
            out.parts_.push_back(std::move(iv));
        }
    }
    for (const auto& iv : out.parts_) out.measure_ += iv.length();
    return out;
}

bool IntervalUnion::contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    return x <= std::prev(it)->hi;
}

}  // namespace trapmeasure
