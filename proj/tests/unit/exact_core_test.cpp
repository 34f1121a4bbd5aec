#include "trapmeasure/interval.hpp"
#include "trapmeasure/profile.hpp"
#include "trapmeasure/rational.hpp"

#include "../support/oracles.hpp"

#include "doctest.h"

#include <random>

using namespace trapmeasure;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

std::vector<Interval> random_parts(std::mt19937_64& rng, std::size_t count) {
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < count; ++i) {
        const long den = 1 + static_cast<long>(rng() % 12);
        const long a = static_cast<long>(rng() % 30);
        const long len = static_cast<long>(rng() % 6);
        parts.push_back({r(a, den), r(a + len, den)});
    }
    return parts;
}

}  // namespace

TEST_CASE("rational stays in lowest terms") {
    const Rational a(6, -8);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 4);
    CHECK((r(1, 3) + r(1, 6)) == r(1, 2));
    CHECK((r(2, 3) * r(3, 4)).to_string() == "1/2");
    CHECK((r(5) / r(10)).to_string() == "1/2");
    CHECK(r(4, 2).to_string() == "2");
    CHECK(r(-1, 3) < r(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(r(1) / r(0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5/6") == r(5, 6));
    CHECK(Rational::parse("-10/4") == r(-5, 2));
    CHECK(Rational::parse("7") == r(7));
    CHECK(Rational::parse("0.25") == r(1, 4));
    CHECK(Rational::parse("-1.5") == r(-3, 2));
    CHECK(Rational::parse(".5") == r(1, 2));
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("0.-5"), std::invalid_argument);
}

TEST_CASE("normalize merges touching intervals") {
    const auto u = normalize({{r(0), r(1, 3)}, {r(1, 3), r(2, 3)}});
    REQUIRE(u.size() == 1);
    CHECK(u.parts()[0] == Interval{r(0), r(2, 3)});
    CHECK(u.measure() == r(2, 3));
}

TEST_CASE("normalize of nothing") {
    const auto u = normalize({});
    CHECK(u.empty());
    CHECK(measure(u) == r(0));
}

TEST_CASE("normalize sorts, deduplicates and keeps gaps") {
    const std::vector<Interval> parts{{r(1, 2), r(5, 6)}, {r(0), r(1, 3)}, {r(1, 2), r(5, 6)}};
    const auto u = normalize(parts);
    REQUIRE(u.size() == 2);
    CHECK(u.parts()[0] == Interval{r(0), r(1, 3)});
    CHECK(u.parts()[1] == Interval{r(1, 2), r(5, 6)});
    CHECK(u.measure() == r(2, 3));
    CHECK(oracle::pairwise_measure(parts) == r(2, 3));
    CHECK(u.contains(r(1, 3)));
    CHECK_FALSE(u.contains(r(2, 5)));
    CHECK(u.contains(r(5, 6)));
}

TEST_CASE("normalize rejects reversed interval") {
    CHECK_THROWS_AS((void)normalize({{r(1), r(0)}}), std::invalid_argument);
}

TEST_CASE("measure examples") {
    CHECK(measure(normalize({{r(0), r(2, 3)}})) == r(2, 3));
    CHECK(measure(normalize({{r(0), r(1, 3)}, {r(1, 2), r(5, 6)}})) == r(2, 3));
    CHECK(measure(normalize({{r(1, 4), r(1, 4)}})) == r(0));
}

TEST_CASE("property: union measure agrees with the event sweep and pairwise merge") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const auto parts = random_parts(rng, 1 + rng() % 15);
        const auto u = normalize(parts);
        CHECK(u.measure() == oracle::sweep_measure(parts));
        if (trial % 10 == 0) CHECK(u.measure() == oracle::pairwise_measure(parts));
        for (std::size_t i = 1; i < u.size(); ++i) CHECK(u.parts()[i - 1].hi < u.parts()[i].lo);
        for (const auto& iv : u.parts()) {
            CHECK(oracle::lowest_terms(iv.lo));
            CHECK(oracle::lowest_terms(iv.hi));
        }
        CHECK(oracle::lowest_terms(u.measure()));
    }
}

TEST_CASE("property: measure is monotone and subadditive") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_parts(rng, 1 + rng() % 8);
        const auto b = random_parts(rng, 1 + rng() % 8);
        auto both = a;
        both.insert(both.end(), b.begin(), b.end());
        const auto ma = normalize(a).measure();
        const auto mb = normalize(b).measure();
        const auto mab = normalize(both).measure();
        CHECK(ma <= mab);
        CHECK(mb <= mab);
        CHECK(mab <= ma + mb);
    }
}

TEST_CASE("integrate_plp examples") {
    CHECK(integrate_plp(PiecewiseLinearProfile({{r(0), r(1)}, {r(1), r(1)}})) == r(1));
    CHECK(integrate_plp(PiecewiseLinearProfile({{r(0), r(1)}, {r(1, 2), r(1, 3)}, {r(1), r(1)}})) == r(2, 3));
    CHECK(integrate_plp(PiecewiseLinearProfile({{r(0), r(1)}, {r(1, 2), r(2, 3)}, {r(1), r(1)}})) == r(5, 6));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(PiecewiseLinearProfile({{r(0), r(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearProfile({{r(0), r(1)}, {r(1, 2), r(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearProfile({{r(1, 4), r(1)}, {r(1), r(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearProfile({{r(0), r(1)}, {r(1, 2), r(1)}, {r(1, 2), r(0)}, {r(1), r(1)}}),
                    std::invalid_argument);
}

TEST_CASE("profile evaluation interpolates") {
    const PiecewiseLinearProfile f({{r(0), r(1)}, {r(1, 2), r(1, 3)}, {r(1), r(1)}});
    CHECK(f.evaluate(r(1, 4)) == r(2, 3));
    CHECK(f.evaluate(r(1, 2)) == r(1, 3));
    CHECK(f.evaluate(r(1)) == r(1));
    CHECK_THROWS_AS((void)f.evaluate(r(2)), std::invalid_argument);
}

TEST_CASE("property: integral of pointwise max dominates both integrals") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        // Two profiles on a shared grid; the pointwise max is sampled on a
        // grid refined at every crossing so it stays piecewise linear.
        const long den = 2 + static_cast<long>(rng() % 5);
        std::vector<Breakpoint> fa, fb;
        for (long i = 0; i <= den; ++i) {
            fa.push_back({r(i, den), r(static_cast<long>(rng() % 7), 6)});
            fb.push_back({r(i, den), r(static_cast<long>(rng() % 7), 6)});
        }
        std::vector<Breakpoint> fmax;
        for (long i = 0; i <= den; ++i) {
            fmax.push_back({fa[i].y, max(fa[i].value, fb[i].value)});
            if (i == den) break;
            const Rational d0 = fa[i].value - fb[i].value;
            const Rational d1 = fa[i + 1].value - fb[i + 1].value;
            if (d0.sign() * d1.sign() < 0) {
                const Rational s = d0 / (d0 - d1);
                const Rational y = fa[i].y + s * (fa[i + 1].y - fa[i].y);
                const Rational v = fa[i].value + s * (fa[i + 1].value - fa[i].value);
                fmax.push_back({y, v});
            }
        }
        const auto ia = integrate_plp(PiecewiseLinearProfile(fa));
        const auto ib = integrate_plp(PiecewiseLinearProfile(fb));
        const auto im = integrate_plp(PiecewiseLinearProfile(fmax));
        CHECK(max(ia, ib) <= im);
        CHECK(oracle::lowest_terms(im));
    }
}
