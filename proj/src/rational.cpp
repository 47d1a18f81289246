#include "itemsum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace itemsum {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make_reduced(wide num, wide den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {narrow(num), narrow(den)};
}

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
            throw std::invalid_argument("rational out of range: '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    std::int64_t g = std::gcd(num, den);
    if (den < 0) {
        g = -g;
    }
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) {
        den_ = 1;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t n = parse_digits(s.substr(0, slash), text);
        std::int64_t d = parse_digits(s.substr(slash + 1), text);
        if (d == 0) {
            throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
        }
        r = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        if (frac_part.size() > 17) {
            throw std::invalid_argument("too many decimal places: '" + std::string(text) + "'");
        }
        std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        r = make_reduced(static_cast<wide>(whole) * scale + frac, scale);
    } else {
        r = Rational(parse_digits(s, text), 1);
    }
    return negative ? Rational(0, 1) - r : r;
}

std::string Rational::to_string() const {
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    int places = std::max(twos, fives);
    if (places == 0) {
        return std::to_string(num_);
    }
    wide scaled = static_cast<wide>(num_ < 0 ? -num_ : num_);
    wide factor = 1;
    for (int i = 0; i < places; ++i) factor *= 10;
    scaled = scaled * factor / den_;
    auto whole = static_cast<std::int64_t>(scaled / factor);
    auto frac = static_cast<std::int64_t>(scaled % factor);
    std::string frac_text = std::to_string(frac);
    frac_text.insert(0, static_cast<std::size_t>(places) - frac_text.size(), '0');
    while (frac_text.size() > 1 && frac_text.back() == '0') frac_text.pop_back();
    return (num_ < 0 ? "-" : "") + std::to_string(whole) + "." + frac_text;
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace itemsum
