#include "trapmeasure/permutation.hpp"
#include "trapmeasure/trapezoid.hpp"

#include "../support/oracles.hpp"

#include "doctest.h"

#include <set>

using namespace trapmeasure;

using Image = std::vector<Index>;

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation(Image{}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(Image{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(Image{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(Image{1, 3}), std::invalid_argument);
    CHECK(Permutation(Image{2, 1})(1) == 2);
}

TEST_CASE("digit_swap_perm") {
    CHECK(digit_swap_perm(0).image() == Image{1});
    CHECK(digit_swap_perm(1).image() == Image{1, 3, 2});
    const auto s2 = digit_swap_perm(2);
    CHECK(s2.image() == Image{1, 3, 2, 7, 9, 8, 4, 6, 5});
    CHECK(s2(6) == 8);
    CHECK_THROWS_AS((void)digit_swap_perm(max_digit_swap_order + 1), std::out_of_range);
}

TEST_CASE("property: digit_swap_perm is an involution") {
    for (unsigned m = 0; m <= 8; ++m) {
        const auto s = digit_swap_perm(m);
        CHECK(s.compose(s) == identity(s.size()));
    }
}

TEST_CASE("composite_sigma") {
    CHECK(composite_sigma(4).image() == Image{1, 3, 2, 4});
    CHECK(composite_sigma(3).image() == Image{1, 3, 2});
    CHECK(composite_sigma(2).image() == Image{1, 2});
    CHECK(composite_sigma(1).image() == Image{1});
    for (unsigned m = 0; m <= 6; ++m) {
        std::size_t n = 1;
        for (unsigned k = 0; k < m; ++k) n *= 3;
        CHECK(composite_sigma(n) == digit_swap_perm(m));
    }
}

TEST_CASE("composite plan of 1000") {
    const auto plan = plan_composite(1000);
    CHECK(plan.digits == std::vector<unsigned>{1, 1, 0, 1, 0, 0, 1});
    REQUIRE(plan.blocks.size() == 7);
    CHECK(plan.blocks.front() == CompositeBlock{729, 1, 6});
    CHECK(plan.blocks.back() == CompositeBlock{1, 1, 0});
    std::size_t total = 0;
    for (const auto& b : plan.blocks) {
        CHECK(b.count <= 2);
        total += b.size * b.count;
    }
    CHECK(total == 1000);
    for (std::size_t i = 1; i < plan.blocks.size(); ++i) CHECK(plan.blocks[i - 1].size > plan.blocks[i].size);
}

TEST_CASE("identity and reversal") {
    CHECK(reversal(3).image() == Image{3, 2, 1});
    CHECK(identity(5).image() == Image{1, 2, 3, 4, 5});
    CHECK(reversal(1).image() == Image{1});
    CHECK_THROWS_AS((void)identity(0), std::invalid_argument);
}

TEST_CASE("enumerate") {
    const auto two = enumerate(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].image() == Image{1, 2});
    CHECK(two[1].image() == Image{2, 1});
    const auto three = enumerate(3);
    REQUIRE(three.size() == 6);
    CHECK(three.front().image() == Image{1, 2, 3});
    CHECK(three.back().image() == Image{3, 2, 1});
    const auto four = enumerate(4);
    REQUIRE(four.size() == 24);
    CHECK(four[10].image() == Image{2, 4, 1, 3});
    CHECK(oracle::lehmer_unrank(4, 10) == Image{2, 4, 1, 3});
}

TEST_CASE("property: enumeration yields n! distinct bijections in Lehmer order") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto all = enumerate(n);
        CHECK(all.size() == factorial(n));
        std::set<Image> distinct;
        for (const auto& p : all) distinct.insert(p.image());
        CHECK(distinct.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (std::uint64_t rank = 0; rank < all.size(); rank += 1 + rank / 3)
            CHECK(unrank(n, rank).image() == oracle::lehmer_unrank(n, rank));
    }
}

TEST_CASE("rank ranges partition the enumeration") {
    std::vector<Image> joined;
    const std::uint64_t cuts[] = {0, 7, 8, 50, 120};
    for (std::size_t i = 0; i + 1 < std::size(cuts); ++i)
        for_each_permutation(5, cuts[i], cuts[i + 1], [&](const Image& img) {
            joined.push_back(img);
            return true;
        });
    REQUIRE(joined.size() == 120);
    const auto all = enumerate(5);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(joined[i] == all[i].image());
}

TEST_CASE("factorial overflow") {
    CHECK(factorial(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS((void)factorial(21), std::overflow_error);
    CHECK_THROWS_AS((void)unrank(3, 6), std::out_of_range);
}

TEST_CASE("canonical_class") {
    CHECK(canonical_class(Permutation(Image{1, 3, 2})).image() == Image{1, 3, 2});
    CHECK(canonical_class(identity(4)) == identity(4));
    CHECK(canonical_class(Permutation(Image{2, 3, 1})).image() == Image{2, 3, 1});
    CHECK(Permutation(Image{2, 3, 1}).inverse().image() == Image{3, 1, 2});
    CHECK(Permutation(Image{2, 3, 1}).mirrored().image() == Image{3, 1, 2});
    CHECK(Permutation(Image{1, 3, 2}).mirrored().image() == Image{2, 1, 3});
}

TEST_CASE("property: is_canonical agrees with canonical_class") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<Image> classes;
        for (const auto& p : enumerate(n)) {
            const auto c = canonical_class(p);
            classes.insert(c.image());
            CHECK(is_canonical(p.image()) == (c == p));
        }
        std::size_t canonical_count = 0;
        for (const auto& p : enumerate(n)) canonical_count += is_canonical(p.image()) ? 1 : 0;
        CHECK(canonical_count == classes.size());
    }
}

TEST_CASE("property: area is invariant under the flip/mirror group") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate(n)) {
            const auto a = area(TrapezoidSpec(p));
            CHECK(area(TrapezoidSpec(p.inverse())) == a);
            CHECK(area(TrapezoidSpec(p.mirrored())) == a);
            CHECK(area(TrapezoidSpec(p.inverse().mirrored())) == a);
        }
    }
}

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("1,3,2", 0).image() == Image{1, 3, 2});
    CHECK(parse_permutation("identity", 3).image() == Image{1, 2, 3});
    CHECK(parse_permutation("reversal", 3).image() == Image{3, 2, 1});
    CHECK(parse_permutation("digit-swap:1", 0).image() == Image{1, 3, 2});
    CHECK(parse_permutation("composite", 4).image() == Image{1, 3, 2, 4});
    CHECK(Permutation(Image{1, 3, 2}).to_string() == "1,3,2");
    CHECK_THROWS_AS((void)parse_permutation("1,,2", 0), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_permutation("1,2,2", 0), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_permutation("identity", 0), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_permutation("x", 0), std::invalid_argument);
}
