#include "trapmeasure/gasket.hpp"

#include "trapmeasure/cantor.hpp"
#include "trapmeasure/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace trapmeasure {

GasketSpec::GasketSpec(unsigned depth, unsigned depth_cap) : depth_(depth) {
    if (depth > depth_cap)
        throw std::out_of_range("gasket depth " + std::to_string(depth) + " exceeds cap " + std::to_string(depth_cap));
}

Direction Direction::from_slope(Rational slope) {
    if (slope.sign() <= 0) throw std::invalid_argument("exact direction needs a positive slope");
    Direction d;
    d.angle_ = std::atan(slope.to_double());
    d.slope_ = std::move(slope);
    return d;
}

Direction Direction::from_angle(double radians) {
    if (!std::isfinite(radians)) throw std::invalid_argument("projection angle must be finite");
    Direction d;
    d.angle_ = std::fmod(radians, std::numbers::pi);
    if (d.angle_ < 0.0) d.angle_ += std::numbers::pi;
    return d;
}

std::vector<std::pair<Rational, Rational>> gasket_anchors(const GasketSpec& spec) {
    std::vector<std::pair<Rational, Rational>> anchors{{Rational(0), Rational(0)}};
    for (unsigned k = 1; k <= spec.depth(); ++k) {
        const Rational step = Rational(2) / pow3(k);
        const auto count = anchors.size();
        for (std::size_t i = 0; i < count; ++i) anchors.emplace_back(anchors[i].first + step, anchors[i].second);
        for (std::size_t i = 0; i < count; ++i) anchors.emplace_back(anchors[i].first, anchors[i].second + step);
    }
    return anchors;
}

namespace {

std::vector<std::pair<double, double>> float_anchors(unsigned depth) {
    std::vector<std::pair<double, double>> anchors{{0.0, 0.0}};
    for (unsigned k = 1; k <= depth; ++k) {
        const double step = 2.0 / std::pow(3.0, k);
        const auto count = anchors.size();
        for (std::size_t i = 0; i < count; ++i) anchors.emplace_back(anchors[i].first + step, anchors[i].second);
        for (std::size_t i = 0; i < count; ++i) anchors.emplace_back(anchors[i].first, anchors[i].second + step);
    }
    return anchors;
}

std::vector<FloatInterval> merge_sorted(std::vector<FloatInterval> parts, double tolerance) {
    std::sort(parts.begin(), parts.end(), [](const FloatInterval& a, const FloatInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<FloatInterval> merged;
    for (const auto& iv : parts) {
        if (!merged.empty() && iv.lo <= merged.back().hi + tolerance)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return merged;
}

double total_length(const std::vector<FloatInterval>& parts) {
    double sum = 0.0;
    for (const auto& iv : parts) sum += iv.hi - iv.lo;
    return sum;
}

double merge_tolerance(unsigned depth) { return 1e-12 * std::pow(3.0, depth); }

std::vector<FloatInterval> numeric_parts(const std::vector<std::pair<double, double>>& anchors, unsigned depth,
                                         double angle) {
    const double side = std::pow(3.0, -static_cast<double>(depth));
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double lo_off = side * std::min({0.0, c, s});
    const double hi_off = side * std::max({0.0, c, s});
    std::vector<FloatInterval> parts;
    parts.reserve(anchors.size());
    for (const auto& [x, y] : anchors) {
        const double w = x * c + y * s;
        parts.push_back({w + lo_off, w + hi_off});
    }
    return merge_sorted(std::move(parts), merge_tolerance(depth));
}

}  // namespace

Projection project(const GasketSpec& spec, const Direction& dir) {
    Projection out;
    if (!dir.exact()) {
        out.parts = numeric_parts(float_anchors(spec.depth()), spec.depth(), dir.angle());
        out.measure = total_length(out.parts);
        return out;
    }
    // Dividing by cos(theta) turns x cos + y sin into x + slope * y, which
    // stays rational. The triangle's vertices then map to w, w + side and
    // w + slope * side.
    const Rational& slope = dir.slope();
    const Rational side = Rational(1) / pow3(spec.depth());
    const Rational width = side * max(Rational(1), slope);
    std::vector<Interval> parts;
    for (const auto& [x, y] : gasket_anchors(spec)) {
        Rational w = x + slope * y;
        Rational hi = w + width;
        parts.push_back({std::move(w), std::move(hi)});
    }
    out.scaled = normalize(std::move(parts));
    out.scaled_measure = out.scaled->measure();
    out.scale_factor = 1.0 / std::sqrt(1.0 + slope.to_double() * slope.to_double());
    for (const auto& iv : out.scaled->parts())
        out.parts.push_back({iv.lo.to_double() * out.scale_factor, iv.hi.to_double() * out.scale_factor});
    out.measure = out.scale_factor * out.scaled_measure->to_double();
    return out;
}

double projection_measure(const GasketSpec& spec, double angle) {
    return project(spec, Direction::from_angle(angle)).measure;
}

double favard(const GasketSpec& spec, unsigned quad_points, unsigned workers) {
    if (quad_points < 16) throw std::invalid_argument("favard needs at least 16 quadrature points");
    const auto anchors = float_anchors(spec.depth());
    const unsigned n = quad_points;

    // theta and pi/2 - theta (and 3pi/2 - theta on the upper half) give equal
    // measures; on an even grid these map midpoints onto midpoints.
    auto mirror = [n](unsigned i) -> unsigned {
        if (n % 2 != 0) return i;
        return i < n / 2 ? n / 2 - 1 - i : 3 * n / 2 - 1 - i;
    };
    std::vector<unsigned> representatives;
    for (unsigned i = 0; i < n; ++i)
        if (i <= mirror(i)) representatives.push_back(i);

    std::vector<double> values(n, 0.0);
    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const unsigned i = representatives[r];
            const double theta = (i + 0.5) * std::numbers::pi / n;
            values[i] = total_length(numeric_parts(anchors, spec.depth(), theta));
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(representatives.size())));
    if (workers == 1) {
        evaluate(0, representatives.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (representatives.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(representatives.size(), begin + chunk);
            if (begin < end) pool.emplace_back(evaluate, begin, end);
        }
    }
    for (unsigned i = 0; i < n; ++i)
        if (mirror(i) < i) values[i] = values[mirror(i)];

    double sum = 0.0;
    for (double v : values) sum += v;
    // (1/pi) * sum * (pi/n)
    return sum / n;
}

std::vector<Lemma1Row> lemma1_check(unsigned depth, std::span<const Rational> t_grid, double tolerance) {
    const GasketSpec spec(depth);
    std::vector<Lemma1Row> rows;
    for (const auto& t : t_grid) {
        const Rational lhs = slice_set(depth, t).measure();
        const double td = t.to_double();
        const double phi = std::atan((2.0 - td) / (1.0 + td));
        const double rhs = (1.0 + td) * projection_measure(spec, phi);
        const double lhs_d = lhs.to_double();
        rows.push_back({depth, t, lhs, rhs, lhs_d / rhs, lhs_d <= rhs + tolerance});
    }
    return rows;
}

double exp_power_integral(double n, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("exponent p must lie in (0, 1)");
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("upper limit n must be positive and finite");
    // x = u^(1/(1-p)) gives dx x^-p = du / (1-p), so the integrand is smooth.
    const double q = 1.0 / (1.0 - p);
    const double head_end = std::min(n, 1.0);
    auto head = [q](double u) { return q * std::exp(std::pow(u, q)); };
    double total = adaptive_simpson(head, 0.0, std::pow(head_end, 1.0 - p), 1e-14).value;
    if (n > 1.0) {
        auto tail = [p](double x) { return std::exp(x) * std::pow(x, -p); };
        const double scale = std::exp(n) * std::pow(n, -p);
        total += adaptive_simpson(tail, 1.0, n, 1e-13 * scale).value;
    }
    return total;
}

std::vector<Lemma2Row> lemma2_check(double p, std::span<const double> n_values) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("exponent p must lie in (0, 1)");
    std::vector<Lemma2Row> rows;
    for (double n : n_values) {
        const double integral = exp_power_integral(n, p);
        const double ratio = integral / (std::exp(n) * std::pow(n, -p));
        const bool finite = std::isfinite(ratio) && ratio > 0.0;
        const bool decreasing = rows.empty() || ratio <= rows.back().ratio;
        rows.push_back({n, integral, ratio, finite && decreasing});
    }
    return rows;
}

DecayFit decay_fit(std::vector<std::pair<double, double>> pairs) {
    if (pairs.size() < 3) throw std::invalid_argument("decay_fit needs at least 3 points");
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [m, v] : pairs) {
        if (!(m >= 1.0)) throw std::invalid_argument("decay_fit needs scale indices m >= 1");
        if (!(v > 0.0)) throw std::invalid_argument("decay_fit needs positive values");
        mean_x += std::log(m);
        mean_y += std::log(v);
    }
    mean_x /= static_cast<double>(pairs.size());
    mean_y /= static_cast<double>(pairs.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [m, v] : pairs) {
        const double dx = std::log(m) - mean_x;
        sxx += dx * dx;
        sxy += dx * (std::log(v) - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("decay_fit needs at least two distinct scale indices");
    const double slope = sxy / sxx;
    DecayFit fit;
    fit.p = slope == 0.0 ? 0.0 : -slope;
    fit.C = std::exp(mean_y - slope * mean_x);
    double ss = 0.0;
    for (const auto& [m, v] : pairs) {
        const double r = std::log(v) - (std::log(fit.C) + slope * std::log(m));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss);
    fit.pairs = std::move(pairs);
    return fit;
}

}  // namespace trapmeasure
