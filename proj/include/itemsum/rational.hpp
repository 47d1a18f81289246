#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace itemsum {

/// Exact fraction with a positive denominator, always kept in lowest terms.
///
/// Supports, thresholds, rates and sentence scores all flow through this
/// type so that threshold comparisons never depend on floating-point
/// rounding. Comparison cross-multiplies in 128-bit arithmetic.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den);
    static Rational integer(std::int64_t v) { return {v, 1}; }

    /// Parses "7/85", "0.08" or "1". Exponent notation is rejected.
    /// Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact decimal form when the expansion terminates ("0.08"), else "n/d".
    std::string to_string() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace itemsum
