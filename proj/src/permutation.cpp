#include "trapmeasure/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace trapmeasure {

Permutation::Permutation(std::vector<Index> image) : image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("permutation must have at least one element");
    std::vector<bool> seen(image_.size() + 1, false);
    for (Index v : image_) {
        if (v < 1 || v > image_.size() || seen[v])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(image_.size()));
        seen[v] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<Index> inv(image_.size());
    for (Index j = 0; j < image_.size(); ++j) inv[image_[j] - 1] = j + 1;
    return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::mirrored() const {
    const auto n = static_cast<Index>(image_.size());
    std::vector<Index> out(n);
    for (Index j = 0; j < n; ++j) out[j] = n + 1 - image_[n - 1 - j];
    return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (inner.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<Index> out(size());
    for (Index j = 0; j < size(); ++j) out[j] = image_[inner.image_[j] - 1];
    return Permutation(std::move(out), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < image_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(image_[j]);
    }
    return out;
}

Permutation identity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("identity needs n >= 1");
    std::vector<Index> img(n);
    std::iota(img.begin(), img.end(), Index{1});
    return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation reversal(std::size_t n) {
    if (n == 0) throw std::invalid_argument("reversal needs n >= 1");
    std::vector<Index> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = static_cast<Index>(n - j);
    return Permutation(std::move(img), Permutation::Unchecked{});
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    if (text.empty()) throw std::invalid_argument("empty " + std::string(what));
    std::size_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
        if (v > (std::numeric_limits<Index>::max() - 9) / 10)
            throw std::invalid_argument(std::string(what) + " out of range: '" + std::string(text) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t n) {
    auto need_n = [&] {
        if (n == 0) throw std::invalid_argument("shortcut '" + std::string(text) + "' needs n");
    };
    if (text == "identity") { need_n(); return identity(n); }
    if (text == "reversal") { need_n(); return reversal(n); }
    if (text == "composite") { need_n(); return composite_sigma(n); }
    if (text.starts_with("digit-swap:")) {
        const auto m = parse_count(text.substr(11), "digit-swap order");
        if (m > max_digit_swap_order) throw std::invalid_argument("digit-swap order too large");
        return digit_swap_perm(static_cast<unsigned>(m));
    }
    std::vector<Index> img;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        img.push_back(static_cast<Index>(parse_count(token, "permutation entry")));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(img));
}

Permutation digit_swap_perm(unsigned m) {
    if (m > max_digit_swap_order)
        throw std::out_of_range("digit_swap_perm: 3^" + std::to_string(m) + " overflows the index type");
    Index n = 1;
    for (unsigned i = 0; i < m; ++i) n *= 3;
    std::vector<Index> img(n);
    for (Index x = 0; x < n; ++x) {
        Index rest = x, swapped = 0, place = 1;
        for (unsigned k = 0; k < m; ++k) {
            swapped += ((2 * (rest % 3)) % 3) * place;
            rest /= 3;
            place *= 3;
        }
        img[x] = swapped + 1;
    }
    return Permutation(std::move(img));
}

CompositePlan plan_composite(std::size_t n) {
    if (n == 0) throw std::invalid_argument("composite plan needs n >= 1");
    CompositePlan plan{n, {}, {}};
    std::vector<unsigned> low_first;
    for (std::size_t rest = n; rest > 0; rest /= 3) low_first.push_back(static_cast<unsigned>(rest % 3));
    plan.digits.assign(low_first.rbegin(), low_first.rend());
    Index size = 1;
    std::vector<CompositeBlock> low_blocks;
    for (unsigned j = 0; j < low_first.size(); ++j, size *= 3) low_blocks.push_back({size, low_first[j], j});
    plan.blocks.assign(low_blocks.rbegin(), low_blocks.rend());
    return plan;
}

Permutation composite_sigma(std::size_t n) {
    const auto plan = plan_composite(n);
    std::vector<Index> img;
    img.reserve(n);
    for (const auto& block : plan.blocks) {
        if (block.count == 0) continue;
        const auto base = digit_swap_perm(block.order);
        for (unsigned c = 0; c < block.count; ++c) {
            const auto offset = static_cast<Index>(img.size());
            for (Index v : base.image()) img.push_back(v + offset);
        }
    }
    return Permutation(std::move(img));
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        if (f > std::numeric_limits<std::uint64_t>::max() / k)
            throw std::overflow_error(std::to_string(n) + "! does not fit in 64 bits");
        f *= k;
    }
    return f;
}

Permutation unrank(std::size_t n, std::uint64_t rank) {
    if (n == 0) throw std::invalid_argument("unrank needs n >= 1");
    if (rank >= factorial(n)) throw std::out_of_range("rank exceeds n!");
    std::vector<Index> pool(n);
    std::iota(pool.begin(), pool.end(), Index{1});
    std::vector<Index> img;
    img.reserve(n);
    for (std::size_t k = n; k >= 1; --k) {
        const auto block = factorial(k - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        img.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(img), Permutation::Unchecked{});
}

void for_each_permutation(std::size_t n, std::uint64_t first, std::uint64_t last,
                          const std::function<bool(const std::vector<Index>&)>& visit) {
    if (first >= last) return;
    auto img = unrank(n, first).image();
    for (std::uint64_t r = first; r < last; ++r) {
        if (!visit(img)) return;
        std::next_permutation(img.begin(), img.end());
    }
}

std::vector<Permutation> enumerate(std::size_t n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    for_each_permutation(n, 0, factorial(n), [&](const std::vector<Index>& img) {
        out.emplace_back(img);
        return true;
    });
    return out;
}

Permutation canonical_class(const Permutation& sigma) {
    const auto inv = sigma.inverse();
    return std::min({sigma, inv, sigma.mirrored(), inv.mirrored()});
}

bool is_canonical(const std::vector<Index>& image) {
    const auto n = static_cast<Index>(image.size());
    thread_local std::vector<Index> inv, mir, inv_mir;
    inv.resize(n);
    mir.resize(n);
    inv_mir.resize(n);
    for (Index j = 0; j < n; ++j) inv[image[j] - 1] = j + 1;
    for (Index j = 0; j < n; ++j) {
        mir[j] = n + 1 - image[n - 1 - j];
        inv_mir[j] = n + 1 - inv[n - 1 - j];
    }
    return image <= inv && image <= mir && image <= inv_mir;
}

}  // namespace trapmeasure
