#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace trapmeasure {

using Index = std::uint32_t;

/// Bijection of {1..n}; image()[j-1] holds sigma(j).
class Permutation {
public:
    /// Validates that the image is a bijection of {1..n}.
    explicit Permutation(std::vector<Index> image);

    [[nodiscard]] std::size_t size() const { return image_.size(); }
    /// sigma(j) for 1-based j.
    [[nodiscard]] Index operator()(Index j) const { return image_[j - 1]; }
    [[nodiscard]] const std::vector<Index>& image() const { return image_; }

    [[nodiscard]] Permutation inverse() const;
    /// r * sigma * r with r the reversal j -> n+1-j.
    [[nodiscard]] Permutation mirrored() const;
    [[nodiscard]] Permutation compose(const Permutation& inner) const;

    /// Comma-separated 1-based image, e.g. "1,3,2".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.image_ <=> b.image_; }

private:
    struct Unchecked {};
    Permutation(std::vector<Index> image, Unchecked) : image_(std::move(image)) {}
    friend Permutation identity(std::size_t n);
    friend Permutation reversal(std::size_t n);
    friend Permutation unrank(std::size_t n, std::uint64_t rank);

    std::vector<Index> image_;
};

[[nodiscard]] Permutation identity(std::size_t n);
[[nodiscard]] Permutation reversal(std::size_t n);

/// Parses "1,3,2" or one of the shortcuts identity, reversal, digit-swap:m,
/// composite. Shortcuts other than digit-swap need n.
[[nodiscard]] Permutation parse_permutation(std::string_view text, std::size_t n);

/// Largest m accepted by digit_swap_perm (3^m must fit in Index).
inline constexpr unsigned max_digit_swap_order = 20;

/// Permutation of {1..3^m}: writes x-1 in m base-3 digits and maps every digit
/// d to 2d mod 3, i.e. swaps digits 1 and 2.
[[nodiscard]] Permutation digit_swap_perm(unsigned m);

struct CompositeBlock {
    Index size;   // 3^j
    unsigned count;  // base-3 digit x_j
    unsigned order;  // j
    friend bool operator==(const CompositeBlock&, const CompositeBlock&) = default;
};

/// Base-3 block decomposition of n, most significant digit first.
struct CompositePlan {
    std::size_t n;
    std::vector<unsigned> digits;  // x_k .. x_0
    std::vector<CompositeBlock> blocks;  // one entry per digit, largest block size first
};

[[nodiscard]] CompositePlan plan_composite(std::size_t n);

/// Block-diagonal permutation: x_k copies of digit_swap_perm(k), then x_{k-1}
/// copies of digit_swap_perm(k-1), ..., each offset to its block start.
[[nodiscard]] Permutation composite_sigma(std::size_t n);

/// n! or throws std::overflow_error when it does not fit in 64 bits.
[[nodiscard]] std::uint64_t factorial(std::size_t n);

/// Permutation at the given 0-based lexicographic rank.
[[nodiscard]] Permutation unrank(std::size_t n, std::uint64_t rank);

/// Visits the permutations with lexicographic rank in [first, last), in
/// order. The callback receives the image; returning false stops early.
void for_each_permutation(std::size_t n, std::uint64_t first, std::uint64_t last,
                          const std::function<bool(const std::vector<Index>&)>& visit);

/// All n! permutations in lexicographic order.
[[nodiscard]] std::vector<Permutation> enumerate(std::size_t n);

/// Lexicographically least of {sigma, sigma^-1, r sigma r, r sigma^-1 r}.
[[nodiscard]] Permutation canonical_class(const Permutation& sigma);
/// Same test on a raw image without allocating a Permutation per call.
[[nodiscard]] bool is_canonical(const std::vector<Index>& image);

}  // namespace trapmeasure
