#include "trapmeasure/cantor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trapmeasure {

DigitSetSpec::DigitSetSpec(unsigned depth, std::array<Rational, 3> digits)
    : depth_(depth), digits_(std::move(digits)) {
    for (const auto& d : digits_) {
        if (d < Rational(0) || Rational(2) < d)
            throw std::invalid_argument("digit " + d.to_string() + " outside [0, 2]");
    }
}

namespace {

// Anchors scaled to integers: anchor = numerator / (common_den * 3^n).
struct ScaledAnchors {
    std::vector<mpz_class> numerators;
    mpz_class scale;  // common_den * 3^n
};

ScaledAnchors scaled_anchors(const DigitSetSpec& spec, unsigned depth_cap) {
    if (spec.depth() > depth_cap)
        throw std::out_of_range("depth " + std::to_string(spec.depth()) + " exceeds cap " +
                                std::to_string(depth_cap));
    mpz_class common = 1;
    for (const auto& d : spec.digits()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.denominator().get_mpz_t());
    std::array<mpz_class, 3> digit_num;
    for (std::size_t i = 0; i < 3; ++i) digit_num[i] = spec.digits()[i].numerator() * (common / spec.digits()[i].denominator());

    // D_k = union over digits d of (d + D_{k-1}) / 3; in scaled form the new
    // leading digit is weighted by 3^{k-1}.
    std::vector<mpz_class> current{mpz_class(0)};
    mpz_class place = 1;
    for (unsigned k = 0; k < spec.depth(); ++k) {
        std::vector<mpz_class> next;
        next.reserve(current.size() * 3);
        for (const auto& d : digit_num) {
            const mpz_class lead = d * place;
            for (const auto& x : current) next.push_back(x + lead);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
        place *= 3;
    }
    // The most significant digit was added last with the largest weight, so
    // numerators read as sum_k x_k 3^{n-k}.
    return {std::move(current), common * place};
}

}  // namespace

std::vector<Rational> anchor_points(const DigitSetSpec& spec, unsigned depth_cap) {
    const auto scaled = scaled_anchors(spec, depth_cap);
    std::vector<Rational> out;
    out.reserve(scaled.numerators.size());
    for (const auto& num : scaled.numerators) out.emplace_back(num, scaled.scale);
    return out;
}

IntervalUnion partial_cantor(const DigitSetSpec& spec, unsigned depth_cap) {
    const auto scaled = scaled_anchors(spec, depth_cap);
    const mpz_class width = scaled.scale / pow3(spec.depth()).numerator();

    // Anchors are sorted and every interval has the same width, so a single
    // pass merges them.
    std::vector<Interval> merged;
    mpz_class lo = scaled.numerators.front();
    mpz_class hi = lo + width;
    for (std::size_t i = 1; i < scaled.numerators.size(); ++i) {
        const auto& x = scaled.numerators[i];
        if (x <= hi) {
            hi = x + width;
        } else {
            merged.push_back({Rational(lo, scaled.scale), Rational(hi, scaled.scale)});
            lo = x;
            hi = x + width;
        }
    }
    merged.push_back({Rational(lo, scaled.scale), Rational(hi, scaled.scale)});
    return normalize(std::move(merged));
}

IntervalUnion slice_set(unsigned depth, const Rational& t, unsigned depth_cap) {
    if (t < Rational(0) || Rational(1) < t) throw std::invalid_argument("slice parameter t outside [0, 1]");
    return partial_cantor(DigitSetSpec(depth, {Rational(0), Rational(1) + t, Rational(2) - t}), depth_cap);
}

Rational cantor_measure_closed(const Rational& t) {
    if (t.sign() < 0) throw std::invalid_argument("cantor parameter must be nonnegative");
    const mpz_class sum = t.numerator() + t.denominator();
    if (mpz_divisible_ui_p(sum.get_mpz_t(), 3) != 0) return Rational(mpz_class(1), t.denominator());
    return Rational(0);
}

Rational slice_measure_closed(const Rational& t) {
    if (t < Rational(0) || Rational(1) < t) throw std::invalid_argument("slice parameter t outside [0, 1]");
    const Rational scale = Rational(1) + t;
    return scale * cantor_measure_closed((Rational(2) - t) / scale);
}

namespace {

mpz_class digits_value(const std::vector<int>& digits) {
    mpz_class v = 0;
    for (int d : digits) v = v * 3 + d;
    return v;
}

int swap_digit(int d) { return (2 * d) % 3; }

}  // namespace

DigitSwapResult digit_swap_real(const Rational& x, unsigned precision) {
    if (x.sign() < 0 || Rational(1) < x) throw std::invalid_argument("digit_swap_real needs x in [0, 1]");
    if (precision == 0) throw std::invalid_argument("digit_swap_real needs precision >= 1");

    std::vector<int> preperiod;
    std::vector<int> period;
    if (x == Rational(1)) {
        period = {2};  // 0.222... is the only expansion of 1 without an integer digit
    } else {
        // Long division in base 3; the first repeated remainder closes the period.
        const mpz_class& q = x.denominator();
        mpz_class r = x.numerator();
        std::map<mpz_class, std::size_t> seen;
        std::vector<int> digits;
        while (!seen.contains(r)) {
            seen.emplace(r, digits.size());
            r *= 3;
            const mpz_class d = r / q;
            digits.push_back(static_cast<int>(d.get_si()));
            r -= d * q;
        }
        const auto start = seen.at(r);
        preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
        period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
    }

    const bool input_is_one = x == Rational(1);
    std::transform(preperiod.begin(), preperiod.end(), preperiod.begin(), swap_digit);
    std::transform(period.begin(), period.end(), period.begin(), swap_digit);

    DigitSwapResult out;
    out.boundary_case = input_is_one || std::all_of(period.begin(), period.end(), [](int d) { return d == 2; });

    // 0.A(B) = (A + B / (3^|B| - 1)) / 3^|A|
    const Rational repeat = Rational(digits_value(period), pow3(static_cast<unsigned>(period.size())).numerator() - 1);
    out.value = (Rational(digits_value(preperiod), mpz_class(1)) + repeat) / pow3(static_cast<unsigned>(preperiod.size()));

    for (unsigned i = 0; i < precision; ++i) {
        const int d = i < preperiod.size() ? preperiod[i] : period[(i - preperiod.size()) % period.size()];
        out.image_digits.push_back(static_cast<char>('0' + d));
    }
    return out;
}

}  // namespace trapmeasure
