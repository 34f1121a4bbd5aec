#pragma once

#include "trapmeasure/gasket.hpp"
#include "trapmeasure/permutation.hpp"
#include "trapmeasure/rational.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace trapmeasure {

enum class SearchMode { exhaustive, heuristic };

[[nodiscard]] std::string_view to_string(SearchMode mode);

/// Smallest area found over permutations of {1..n}. In exhaustive mode this is
/// the exact minimum and argmin is the lexicographically least minimizer; in
/// heuristic mode alpha is an upper bound.
struct AlphaRecord {
    std::size_t n;
    Rational alpha;
    Permutation argmin;
    SearchMode mode;
    std::uint64_t perms_evaluated;
    std::chrono::duration<double> wall_time;
};

/// Largest n accepted by alpha_exhaustive without allow_large.
inline constexpr std::size_t exhaustive_guard = 10;

struct ExhaustiveOptions {
    bool use_symmetry = true;
    unsigned workers = 1;
    bool allow_large = false;
};

/// Exact alpha(n) by enumerating Sym(n). Output other than perms_evaluated and
/// wall_time is independent of the worker count and the symmetry flag.
[[nodiscard]] AlphaRecord alpha_exhaustive(std::size_t n, const ExhaustiveOptions& options = {});

/// Seeded local search over adjacent transpositions with random restarts,
/// started from identity, reversal and composite_sigma(n). budget counts
/// distinct permutations evaluated.
[[nodiscard]] AlphaRecord alpha_heuristic(std::size_t n, std::uint64_t budget, std::uint64_t seed);

struct ScanOptions {
    std::size_t exhaustive_limit = 8;  // exhaustive up to here, heuristic above
    std::uint64_t heuristic_budget = 10'000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool use_symmetry = true;
};

struct ScanReport {
    std::vector<AlphaRecord> records;
    /// n such that alpha(n+1) > alpha(n), both exhaustive.
    std::vector<std::size_t> monotonicity_violations;
    /// (n, alpha(n) * ln n) for n >= 2.
    std::vector<std::pair<std::size_t, double>> log_scaled;
    /// (n, area of the composite construction) for every n in the scan.
    std::vector<std::pair<std::size_t, Rational>> composite_upper_bound;
    /// Fit of the composite areas against ln n, over n >= 3 (needs 3 points).
    std::optional<DecayFit> upper_bound_fit;
};

[[nodiscard]] ScanReport alpha_scan(std::size_t max_n, const ScanOptions& options = {});

}  // namespace trapmeasure
