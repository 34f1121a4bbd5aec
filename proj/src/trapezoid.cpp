#include "trapmeasure/trapezoid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace trapmeasure {

TrapezoidSpec::TrapezoidSpec(std::size_t n, Permutation sigma) : sigma_(std::move(sigma)) {
    if (sigma_.size() != n)
        throw std::invalid_argument("permutation length " + std::to_string(sigma_.size()) +
                                    " does not match n = " + std::to_string(n));
}

Interval Parallelogram::slice(const Rational& y) const {
    const Rational shift = Rational(static_cast<long>(k) - static_cast<long>(j)) * y;
    const Rational width(static_cast<long>(n));
    return {(Rational(static_cast<long>(j) - 1) + shift) / width, (Rational(static_cast<long>(j)) + shift) / width};
}

IntervalUnion slice(const TrapezoidSpec& spec, const Rational& y) {
    if (y < Rational(0) || Rational(1) < y)
        throw std::invalid_argument("slice height " + y.to_string() + " outside [0, 1]");
    const auto n = static_cast<Index>(spec.n());
    std::vector<Interval> parts;
    parts.reserve(n);
    for (Index j = 1; j <= n; ++j) parts.push_back(Parallelogram{j, spec.sigma()(j), n}.slice(y));
    return normalize(std::move(parts));
}

namespace {

__extension__ using Wide = __int128;

// Small exact fraction num/den with den > 0; breakpoint heights have
// numerators and denominators bounded by 2n, so 64 bits suffice.
struct Height {
    std::int64_t num;
    std::int64_t den;

    friend bool operator<(const Height& a, const Height& b) {
        return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
    }
    friend bool operator==(const Height& a, const Height& b) { return a.num == b.num && a.den == b.den; }
};

Height make_height(std::int64_t num, std::int64_t den) {
    if (den < 0) { num = -num; den = -den; }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

// In units of 1/n, the left endpoint of parallelogram j at height y is
// offset_j + slope_j * y with offset_j = j-1 and slope_j = sigma(j) - j.
struct Line {
    std::int64_t offset;
    std::int64_t slope;
};

std::vector<Line> lines_of(const TrapezoidSpec& spec) {
    std::vector<Line> lines(spec.n());
    for (Index j = 1; j <= spec.n(); ++j)
        lines[j - 1] = {static_cast<std::int64_t>(j) - 1,
                        static_cast<std::int64_t>(spec.sigma()(j)) - static_cast<std::int64_t>(j)};
    return lines;
}

std::vector<Height> breakpoint_heights(const std::vector<Line>& lines) {
    std::vector<Height> heights{{0, 1}, {1, 1}};
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            const std::int64_t dslope = lines[a].slope - lines[b].slope;
            if (dslope == 0) continue;
            const std::int64_t doffset = lines[b].offset - lines[a].offset;
            // left endpoints meet, or one left endpoint meets the other's right endpoint
            for (std::int64_t shift : {0, 1, -1}) {
                const Height h = make_height(doffset + shift, dslope);
                if (h.num > 0 && h.num < h.den) heights.push_back(h);
            }
        }
    }
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    return heights;
}

// Sweeps heights in increasing order; the endpoint order changes little
// between neighbouring heights, so an insertion sort seeded with the previous
// order runs in near-linear time.
class SliceSweep {
public:
    explicit SliceSweep(const std::vector<Line>& lines) : lines_(lines), order_(lines.size()), keys_(lines.size()) {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
    }

    // Slice measure at height num/den, scaled by n*den.
    std::int64_t scaled_measure(const Height& h) {
        for (std::size_t i = 0; i < lines_.size(); ++i) keys_[i] = lines_[i].offset * h.den + lines_[i].slope * h.num;
        for (std::size_t i = 1; i < order_.size(); ++i) {
            const auto cur = order_[i];
            std::size_t pos = i;
            while (pos > 0 && keys_[order_[pos - 1]] > keys_[cur]) {
                order_[pos] = order_[pos - 1];
                --pos;
            }
            order_[pos] = cur;
        }
        std::int64_t total = h.den;
        for (std::size_t i = 0; i + 1 < order_.size(); ++i)
            total += std::min(h.den, keys_[order_[i + 1]] - keys_[order_[i]]);
        return total;
    }

private:
    const std::vector<Line>& lines_;
    std::vector<std::size_t> order_;
    std::vector<std::int64_t> keys_;
};

}  // namespace

PiecewiseLinearProfile slice_profile(const TrapezoidSpec& spec) {
    const auto lines = lines_of(spec);
    const auto heights = breakpoint_heights(lines);
    const auto n = static_cast<long>(spec.n());
    SliceSweep sweep(lines);
    std::vector<Breakpoint> points;
    points.reserve(heights.size());
    for (const auto& h : heights)
        points.push_back({Rational(h.num, h.den), Rational(sweep.scaled_measure(h), n * h.den)});
    return PiecewiseLinearProfile(std::move(points));
}

Rational area(const TrapezoidSpec& spec) { return integrate_plp(slice_profile(spec)); }

double area_oracle(const TrapezoidSpec& spec, unsigned samples) {
    if (samples < 2) throw std::invalid_argument("area_oracle needs at least 2 samples");
    // At y = (2i+1)/(2S) every endpoint is an integer multiple of 1/(2nS).
    const auto n = static_cast<std::int64_t>(spec.n());
    const std::int64_t unit = 2 * static_cast<std::int64_t>(samples);
    std::vector<std::int64_t> lefts(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (unsigned i = 0; i < samples; ++i) {
        const std::int64_t odd = 2 * static_cast<std::int64_t>(i) + 1;
        for (std::int64_t j = 1; j <= n; ++j)
            lefts[static_cast<std::size_t>(j - 1)] =
                (j - 1) * unit + (static_cast<std::int64_t>(spec.sigma()(static_cast<Index>(j))) - j) * odd;
        std::sort(lefts.begin(), lefts.end());
        std::int64_t covered = 0;
        std::int64_t reach = lefts.front();
        for (const auto lo : lefts) {
            covered += std::max<std::int64_t>(0, lo + unit - std::max(lo, reach));
            reach = std::max(reach, lo + unit);
        }
        sum += static_cast<double>(covered) / static_cast<double>(n * unit);
    }
    return sum / samples;
}

WeightedSum weighted_sum_identity(std::size_t n) {
    const auto plan = plan_composite(n);
    WeightedSum out{area(TrapezoidSpec(composite_sigma(n))), Rational(0)};
    for (const auto& block : plan.blocks) {
        if (block.count == 0) continue;
        const Rational block_area = area(TrapezoidSpec(digit_swap_perm(block.order)));
        out.rhs += Rational(static_cast<long>(block.count) * static_cast<long>(block.size)) * block_area;
    }
    out.rhs /= Rational(static_cast<long>(n));
    return out;
}

}  // namespace trapmeasure
