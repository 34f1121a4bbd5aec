#include "trapmeasure/cantor.hpp"
#include "trapmeasure/trapezoid.hpp"

#include "../support/oracles.hpp"

#include "doctest.h"

#include <set>

using namespace trapmeasure;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

DigitSetSpec digits(unsigned depth, Rational a, Rational b, Rational c) {
    return DigitSetSpec(depth, {std::move(a), std::move(b), std::move(c)});
}

}  // namespace

TEST_CASE("anchor_points examples") {
    CHECK(anchor_points(digits(1, r(0), r(1), r(1, 2))) == std::vector<Rational>{r(0), r(1, 6), r(1, 3)});
    CHECK(anchor_points(digits(0, r(0), r(1), r(1, 2))) == std::vector<Rational>{r(0)});
    const auto nine = anchor_points(digits(2, r(0), r(1), r(2)));
    REQUIRE(nine.size() == 9);
    for (long i = 0; i < 9; ++i) CHECK(nine[static_cast<std::size_t>(i)] == r(i, 9));
}

TEST_CASE("anchor_points matches direct digit-string enumeration") {
    for (unsigned depth = 0; depth <= 5; ++depth) {
        for (const auto& t : {r(1, 2), r(2, 7), r(3, 2), r(1)}) {
            const std::vector<Rational> ds{r(0), r(1), t};
            const auto brute = oracle::digit_sums(depth, ds);
            const std::set<Rational> expected(brute.begin(), brute.end());
            const auto got = anchor_points(digits(depth, r(0), r(1), t));
            CHECK(std::vector<Rational>(expected.begin(), expected.end()) == got);
        }
    }
}

TEST_CASE("depth and digit validation") {
    CHECK_THROWS_AS((void)anchor_points(digits(13, r(0), r(1), r(2))), std::out_of_range);
    CHECK_THROWS_AS((void)partial_cantor(digits(4, r(0), r(1), r(2)), 3), std::out_of_range);
    CHECK_THROWS_AS(digits(1, r(0), r(1), r(5, 2)), std::invalid_argument);
    CHECK_THROWS_AS(digits(1, r(-1, 3), r(1), r(1)), std::invalid_argument);
}

TEST_CASE("partial_cantor examples") {
    const auto u = partial_cantor(digits(1, r(0), r(1), r(1, 2)));
    CHECK(u == normalize({{r(0), r(2, 3)}}));
    CHECK(partial_cantor(digits(0, r(0), r(1), r(1, 2))).measure() == r(1));
    CHECK(partial_cantor(digits(1, r(0), r(1), r(2))) == normalize({{r(0), r(1)}}));
}

TEST_CASE("partial_cantor equals the normalized union of anchor intervals") {
    for (unsigned depth = 0; depth <= 4; ++depth) {
        for (const auto& t : {r(1, 5), r(4, 3), r(2)}) {
            std::vector<Interval> parts;
            const Rational w = Rational(1) / pow3(depth);
            for (const auto& x : oracle::digit_sums(depth, {r(0), r(1), t})) parts.push_back({x, x + w});
            CHECK(partial_cantor(digits(depth, r(0), r(1), t)).measure() == oracle::sweep_measure(parts));
        }
    }
}

TEST_CASE("slice_set examples") {
    const auto half = slice_set(1, r(1, 2));
    CHECK(half == normalize({{r(0), r(1, 3)}, {r(1, 2), r(5, 6)}}));
    CHECK(half.measure() == r(2, 3));
    CHECK(half == slice(TrapezoidSpec(digit_swap_perm(1)), r(1, 2)));
    CHECK(slice_set(1, r(0)) == normalize({{r(0), r(1)}}));
    CHECK(slice_set(2, r(1)) == normalize({{r(0), r(1)}}));
    CHECK_THROWS_AS((void)slice_set(1, r(3, 2)), std::invalid_argument);
}

TEST_CASE("cantor_measure_closed") {
    CHECK(cantor_measure_closed(r(1, 2)) == r(1, 2));
    CHECK(cantor_measure_closed(r(1)) == r(0));
    CHECK(cantor_measure_closed(r(2)) == r(1));
    CHECK(cantor_measure_closed(r(1, 3)) == r(0));
    CHECK(cantor_measure_closed(r(2, 7)) == r(1, 7));
    CHECK(cantor_measure_closed(r(1, 5)) == r(1, 5));
    CHECK(cantor_measure_closed(r(0)) == r(0));
    CHECK_THROWS_AS((void)cantor_measure_closed(r(-1, 2)), std::invalid_argument);
}

TEST_CASE("slice_measure_closed") {
    CHECK(slice_measure_closed(r(0)) == r(1));
    CHECK(slice_measure_closed(r(1)) == r(1));
    CHECK(slice_measure_closed(r(1, 2)) == r(0));
    // t = 1/4: (7/4)/(5/4) = 7/5, 7+5 = 12 -> (5/4)/5 = 1/4
    CHECK(slice_measure_closed(r(1, 4)) == r(1, 4));
    CHECK_THROWS_AS((void)slice_measure_closed(r(2)), std::invalid_argument);
}

TEST_CASE("property: nested depths never grow") {
    const std::vector<std::array<Rational, 3>> triples{
        {r(0), r(1), r(1, 2)}, {r(0), r(3, 2), r(3, 2)}, {r(0), r(4, 3), r(5, 3)}, {r(1, 7), r(2), r(1)},
        {r(0), r(0), r(2)}};
    for (const auto& d : triples) {
        Rational previous(2);
        for (unsigned depth = 0; depth <= 8; ++depth) {
            const auto m = partial_cantor(DigitSetSpec(depth, d)).measure();
            CHECK(m <= previous);
            previous = m;
        }
    }
}

TEST_CASE("property: partial measures decrease toward the closed form") {
    for (const auto& t : {r(1, 2), r(1, 5), r(2, 7)}) {
        const Rational limit = cantor_measure_closed(t);
        Rational previous(2);
        for (unsigned depth = 0; depth <= 9; ++depth) {
            const auto m = partial_cantor(digits(depth, r(0), r(1), t)).measure();
            CHECK(m <= previous);
            CHECK(limit <= m);
            previous = m;
        }
    }
    const auto deep = partial_cantor(digits(10, r(0), r(1), r(1, 2))).measure();
    CHECK((deep - r(1, 2)).to_double() < 0.02);
    CHECK(r(1, 2) < deep);
}

TEST_CASE("slice sets coincide with digit-swap trapezoid slices") {
    for (unsigned m = 0; m <= 5; ++m) {
        const TrapezoidSpec s(digit_swap_perm(m));
        for (const auto& t : {r(0), r(1, 4), r(1, 3), r(1, 2), r(2, 3), r(1)}) CHECK(slice_set(m, t) == slice(s, t));
    }
}

TEST_CASE("digit_swap_real") {
    CHECK(digit_swap_real(r(1, 3)).value == r(2, 3));
    CHECK_FALSE(digit_swap_real(r(1, 3)).boundary_case);
    CHECK(digit_swap_real(r(0)).value == r(0));
    const auto half = digit_swap_real(r(1, 2), 6);
    CHECK(half.value == r(1));
    CHECK(half.boundary_case);
    CHECK(half.image_digits == "222222");
    const auto one = digit_swap_real(r(1), 4);
    CHECK(one.value == r(1, 2));
    CHECK(one.boundary_case);
    CHECK(digit_swap_real(r(1, 4), 6).image_digits == "010101");
    CHECK(digit_swap_real(r(1, 4)).value == r(1, 8));
    CHECK_THROWS_AS((void)digit_swap_real(r(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)digit_swap_real(r(1, 2), 0), std::invalid_argument);
}

TEST_CASE("property: digit_swap_real is an involution away from boundary cases") {
    for (const auto& x : {r(0), r(1, 3), r(2, 3), r(1, 4), r(3, 4), r(1, 13)}) {
        const auto once = digit_swap_real(x);
        CHECK_FALSE(once.boundary_case);
        CHECK(digit_swap_real(once.value).value == x);
    }
}

TEST_CASE("closed slice measure is nonzero at finitely many t per denominator level") {
    // Nonzero values need (2-t)/(1+t) = p/q with 3 | p+q. For each bound Q,
    // enumerate the ratios with q <= Q that map back into t in [0, 1].
    std::size_t previous = 0;
    for (long bound : {5L, 10L, 20L, 50L}) {
        std::set<Rational> support;
        for (long q = 1; q <= bound; ++q) {
            for (long p = 1; p <= 2 * q; ++p) {
                const Rational ratio(p, q);
                if (ratio.denominator() != q) continue;
                // ratio = (2-t)/(1+t)  =>  t = (2 - ratio)/(1 + ratio)
                const Rational t = (r(2) - ratio) / (r(1) + ratio);
                if (t < r(0) || r(1) < t) continue;
                if (slice_measure_closed(t).sign() != 0) support.insert(t);
            }
        }
        CHECK(support.size() >= previous);
        CHECK(!support.empty());
        previous = support.size();
    }
    CHECK(previous < 50 * 100);
}
