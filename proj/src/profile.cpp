#include "trapmeasure/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace trapmeasure {

PiecewiseLinearProfile::PiecewiseLinearProfile(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2) throw std::invalid_argument("profile needs at least two breakpoints");
    if (breakpoints_.front().y != Rational(0) || breakpoints_.back().y != Rational(1))
        throw std::invalid_argument("profile must span [0, 1]");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i - 1].y < breakpoints_[i].y))
            throw std::invalid_argument("profile breakpoints must be strictly increasing");
    }
}

Rational PiecewiseLinearProfile::evaluate(const Rational& y) const {
    if (y < Rational(0) || Rational(1) < y) throw std::invalid_argument("profile evaluated outside [0, 1]");
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), y,
                               [](const Breakpoint& b, const Rational& v) { return b.y < v; });
    if (it->y == y) return it->value;
    const auto& right = *it;
    const auto& left = *std::prev(it);
    return left.value + (right.value - left.value) * (y - left.y) / (right.y - left.y);
}

namespace {

// Balanced summation keeps operand sizes similar; the running-sum alternative
// drags a huge common denominator through every addition.
Rational tree_sum(std::vector<Rational> terms) {
    if (terms.empty()) return Rational(0);
    while (terms.size() > 1) {
        std::size_t half = 0;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) terms[half++] = terms[i] + terms[i + 1];
        if (terms.size() % 2 == 1) terms[half++] = std::move(terms.back());
        terms.resize(half);
    }
    return std::move(terms.front());
}

}  // namespace

Rational integrate_plp(const PiecewiseLinearProfile& f) {
    const auto& bp = f.breakpoints();
    std::vector<Rational> terms;
    terms.reserve(bp.size() - 1);
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        terms.push_back((bp[i + 1].y - bp[i].y) * (bp[i].value + bp[i + 1].value));
    return tree_sum(std::move(terms)) / Rational(2);
}

}  // namespace trapmeasure
