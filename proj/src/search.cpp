#include "trapmeasure/search.hpp"

#include "trapmeasure/trapezoid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace trapmeasure {

std::string_view to_string(SearchMode mode) {
    return mode == SearchMode::exhaustive ? "exhaustive" : "heuristic";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Champion {
    std::optional<Rational> area;
    std::vector<Index> image;
    std::uint64_t evaluated = 0;

    void offer(const Rational& a, const std::vector<Index>& img) {
        if (!area || a < *area || (a == *area && img < image)) {
            area = a;
            image = img;
        }
    }
};

Rational area_of(const std::vector<Index>& image) { return area(TrapezoidSpec(Permutation(image))); }

}  // namespace

AlphaRecord alpha_exhaustive(std::size_t n, const ExhaustiveOptions& options) {
    if (n == 0) throw std::invalid_argument("alpha needs n >= 1");
    if (n > exhaustive_guard && !options.allow_large)
        throw std::invalid_argument("exhaustive search above n = " + std::to_string(exhaustive_guard) +
                                    " needs the allow-large override");
    const auto start = Clock::now();
    const std::uint64_t total = factorial(n);
    const unsigned workers =
        static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, total)));

    std::vector<Champion> champions(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t first = total * w / workers;
        const std::uint64_t last = total * (w + 1) / workers;
        auto& champ = champions[w];
        for_each_permutation(n, first, last, [&](const std::vector<Index>& img) {
            if (options.use_symmetry && !is_canonical(img)) return true;
            champ.offer(area_of(img), img);
            ++champ.evaluated;
            return true;
        });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    Champion best;
    for (const auto& c : champions) {
        best.evaluated += c.evaluated;
        if (c.area) best.offer(*c.area, c.image);
    }
    return {n, *best.area, Permutation(best.image), SearchMode::exhaustive, best.evaluated,
            Clock::now() - start};
}

AlphaRecord alpha_heuristic(std::size_t n, std::uint64_t budget, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("heuristic search needs n >= 2");
    if (budget < 1) throw std::invalid_argument("heuristic search needs a positive budget");
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);
    auto below = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

    std::optional<std::uint64_t> space;
    try {
        space = factorial(n);
    } catch (const std::overflow_error&) {
    }

    std::map<std::vector<Index>, Rational> seen;
    Champion best;
    // Cached lookups are free; a fresh evaluation consumes budget.
    auto evaluate = [&](const std::vector<Index>& img) -> std::optional<Rational> {
        if (auto it = seen.find(img); it != seen.end()) return it->second;
        if (best.evaluated >= budget) return std::nullopt;
        Rational a = area_of(img);
        ++best.evaluated;
        best.offer(a, img);
        seen.emplace(img, a);
        return a;
    };
    auto exhausted = [&] { return best.evaluated >= budget || (space && seen.size() >= *space); };

    for (const auto& s : {identity(n), reversal(n), composite_sigma(n)}) evaluate(s.image());

    std::vector<std::size_t> positions(n - 1);
    std::uint64_t stale = 0;
    const std::uint64_t stale_limit = 1000 * static_cast<std::uint64_t>(n);
    bool first_round = true;
    while (!exhausted() && stale < stale_limit) {
        auto current = best.image;
        Rational current_area = *best.area;
        if (!first_round) {
            // Restart from a random perturbation of the champion.
            const std::size_t kicks = std::max<std::size_t>(2, n / 4);
            for (std::size_t k = 0; k < kicks; ++k) std::swap(current[below(n)], current[below(n)]);
            const auto before = best.evaluated;
            auto a = evaluate(current);
            if (!a) break;
            stale = best.evaluated == before ? stale + 1 : 0;
            current_area = *a;
        }
        first_round = false;
        bool improved = true;
        while (improved && !exhausted()) {
            improved = false;
            std::iota(positions.begin(), positions.end(), std::size_t{0});
            for (std::size_t i = positions.size(); i > 1; --i) std::swap(positions[i - 1], positions[below(i)]);
            for (std::size_t pos : positions) {
                std::swap(current[pos], current[pos + 1]);
                const auto before = best.evaluated;
                auto a = evaluate(current);
                if (!a) break;
                stale = best.evaluated == before ? stale + 1 : 0;
                if (*a < current_area) {
                    current_area = *a;
                    improved = true;
                    break;
                }
                std::swap(current[pos], current[pos + 1]);
            }
        }
    }
    return {n, *best.area, Permutation(best.image), SearchMode::heuristic, best.evaluated, Clock::now() - start};
}

ScanReport alpha_scan(std::size_t max_n, const ScanOptions& options) {
    if (max_n < 2) throw std::invalid_argument("alpha scan needs max_n >= 2");
    ScanReport report;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n <= options.exhaustive_limit || n == 1) {
            report.records.push_back(
                alpha_exhaustive(n, {options.use_symmetry, options.workers, n > exhaustive_guard}));
        } else {
            report.records.push_back(alpha_heuristic(n, options.heuristic_budget, options.seed));
        }
        report.composite_upper_bound.emplace_back(n, area(TrapezoidSpec(composite_sigma(n))));
    }
    for (std::size_t i = 0; i + 1 < report.records.size(); ++i) {
        const auto& a = report.records[i];
        const auto& b = report.records[i + 1];
        if (a.mode == SearchMode::exhaustive && b.mode == SearchMode::exhaustive && a.alpha < b.alpha)
            report.monotonicity_violations.push_back(a.n);
    }
    for (const auto& r : report.records)
        if (r.n >= 2) report.log_scaled.emplace_back(r.n, r.alpha.to_double() * std::log(static_cast<double>(r.n)));

    std::vector<std::pair<double, double>> pairs;
    for (const auto& [n, a] : report.composite_upper_bound)
        if (n >= 3) pairs.emplace_back(std::log(static_cast<double>(n)), a.to_double());
    if (pairs.size() >= 3) report.upper_bound_fit = decay_fit(std::move(pairs));
    return report;
}

}  // namespace trapmeasure
