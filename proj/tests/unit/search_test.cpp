#include "trapmeasure/search.hpp"
#include "trapmeasure/trapezoid.hpp"

#include "doctest.h"

#include <cmath>

using namespace trapmeasure;

using Image = std::vector<Index>;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("alpha_exhaustive small n") {
    const auto one = alpha_exhaustive(1);
    CHECK(one.alpha == r(1));
    CHECK(one.argmin.image() == Image{1});
    CHECK(one.mode == SearchMode::exhaustive);

    const auto two = alpha_exhaustive(2);
    CHECK(two.alpha == r(3, 4));
    CHECK(two.argmin.image() == Image{2, 1});

    const auto three = alpha_exhaustive(3);
    CHECK(three.alpha == r(2, 3));
    CHECK(three.argmin.image() == Image{3, 2, 1});
    CHECK(three.alpha < area(TrapezoidSpec(digit_swap_perm(1))));
}

TEST_CASE("alpha_exhaustive guard") {
    CHECK_THROWS_AS((void)alpha_exhaustive(11), std::invalid_argument);
    CHECK_THROWS_AS((void)alpha_exhaustive(0), std::invalid_argument);
}

TEST_CASE("property: symmetry pruning and worker count do not change the answer") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto plain = alpha_exhaustive(n, {false, 1, false});
        CHECK(plain.perms_evaluated == factorial(n));
        for (unsigned workers : {1u, 3u, 8u}) {
            const auto pruned = alpha_exhaustive(n, {true, workers, false});
            CHECK(pruned.alpha == plain.alpha);
            CHECK(pruned.argmin == plain.argmin);
            CHECK(pruned.perms_evaluated <= plain.perms_evaluated);
            const auto threaded = alpha_exhaustive(n, {false, workers, false});
            CHECK(threaded.alpha == plain.alpha);
            CHECK(threaded.argmin == plain.argmin);
            CHECK(threaded.perms_evaluated == plain.perms_evaluated);
        }
    }
}

TEST_CASE("property: alpha is below every constructed trapezoid and within [1/n, 1]") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto rec = alpha_exhaustive(n);
        CHECK(rec.alpha <= area(TrapezoidSpec(identity(n))));
        CHECK(rec.alpha <= area(TrapezoidSpec(reversal(n))));
        CHECK(rec.alpha <= area(TrapezoidSpec(composite_sigma(n))));
        CHECK(r(1, static_cast<long>(n)) <= rec.alpha);
        CHECK(rec.alpha <= r(1));
        CHECK(area(TrapezoidSpec(rec.argmin)) == rec.alpha);
    }
}

TEST_CASE("alpha_heuristic") {
    CHECK(alpha_heuristic(3, 3, 7).alpha <= r(2, 3));
    const auto two = alpha_heuristic(2, 100, 1);
    CHECK(two.alpha == r(3, 4));
    CHECK(two.argmin.image() == Image{2, 1});
    CHECK(two.mode == SearchMode::heuristic);
    CHECK(two.perms_evaluated == 2);

    const auto nine = alpha_heuristic(9, 10'000, 11);
    CHECK(nine.alpha <= area(TrapezoidSpec(digit_swap_perm(2))));
    CHECK(nine.perms_evaluated <= 10'000);
    CHECK(area(TrapezoidSpec(nine.argmin)) == nine.alpha);

    CHECK_THROWS_AS((void)alpha_heuristic(1, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)alpha_heuristic(4, 0, 1), std::invalid_argument);
}

TEST_CASE("property: heuristic is an upper bound and reaches alpha when it covers Sym(n)") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto exact = alpha_exhaustive(n);
        const auto small = alpha_heuristic(n, 5, 3);
        CHECK(exact.alpha <= small.alpha);
        const auto full = alpha_heuristic(n, factorial(n), 3);
        CHECK(exact.alpha <= full.alpha);
        if (full.perms_evaluated == factorial(n)) {
            CHECK(full.alpha == exact.alpha);
            CHECK(full.argmin == exact.argmin);
        }
    }
}

TEST_CASE("heuristic search is deterministic for a seed") {
    const auto a = alpha_heuristic(12, 500, 42);
    const auto b = alpha_heuristic(12, 500, 42);
    CHECK(a.alpha == b.alpha);
    CHECK(a.argmin == b.argmin);
    CHECK(a.perms_evaluated == b.perms_evaluated);
}

TEST_CASE("alpha_scan") {
    const auto small = alpha_scan(3);
    REQUIRE(small.records.size() == 3);
    CHECK(small.records[0].alpha == r(1));
    CHECK(small.records[1].alpha == r(3, 4));
    CHECK(small.records[2].alpha == r(2, 3));
    CHECK(small.monotonicity_violations.empty());
    CHECK_FALSE(small.upper_bound_fit.has_value());
    REQUIRE(small.log_scaled.size() == 2);
    CHECK(small.log_scaled[0].second == doctest::Approx(0.75 * std::log(2.0)));

    ScanOptions opts;
    opts.exhaustive_limit = 5;
    opts.heuristic_budget = 200;
    const auto mixed = alpha_scan(7, opts);
    CHECK(mixed.records[4].mode == SearchMode::exhaustive);
    CHECK(mixed.records[5].mode == SearchMode::heuristic);
    CHECK(mixed.composite_upper_bound.size() == 7);
    REQUIRE(mixed.upper_bound_fit.has_value());
    CHECK(mixed.upper_bound_fit->pairs.size() == 5);
    CHECK_THROWS_AS((void)alpha_scan(1), std::invalid_argument);
}

TEST_CASE("composite upper bound decreases along powers of three") {
    Rational previous(2);
    for (unsigned m = 1; m <= 5; ++m) {
        const auto a = area(TrapezoidSpec(digit_swap_perm(m)));
        CHECK(a < previous);
        previous = a;
    }
}
