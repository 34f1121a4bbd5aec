#include "trapmeasure/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace trapmeasure {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::string s(digits[0] == '+' ? digits.substr(1) : digits);
    return mpz_class(s, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(text.substr(0, slash), text),
                        parse_integer(text.substr(slash + 1), text));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        const bool negative = !int_part.empty() && int_part[0] == '-';
        std::string digits(int_part);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        mpz_class whole = parse_integer(digits, text);
        if (frac_part.empty()) return Rational(whole, mpz_class(1));
        mpz_class frac = parse_integer(frac_part, text);
        if (frac_part[0] == '-' || frac_part[0] == '+')
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        mpz_class num = abs(whole) * scale + frac;
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(text, text), mpz_class(1));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow3(unsigned k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, k);
    return Rational(p, mpz_class(1));
}

std::string format_decimal(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

}  // namespace trapmeasure
