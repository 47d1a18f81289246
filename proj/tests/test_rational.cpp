#include <doctest.h>

#include <random>
#include <stdexcept>

#include "itemsum/rational.hpp"

using itemsum::Rational;

TEST_CASE("fractions are kept in lowest terms with a positive denominator") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4).num() == -3);
    CHECK(Rational(3, -4).den() == 4);
    CHECK(Rational(0, 5) == Rational());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts fractions, decimals and integers") {
    CHECK(Rational::parse("7/85") == Rational(7, 85));
    CHECK(Rational::parse("0.08") == Rational(2, 25));
    CHECK(Rational::parse("1") == Rational(1, 1));
    CHECK(Rational::parse(" 0.30 ") == Rational(3, 10));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    for (const char* bad : {"", "abc", "1e-2", "1/0", "0.1.2", "/3", "3/", "0x10"}) {
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("to_string prints terminating decimals exactly and fractions otherwise") {
    CHECK(Rational(2, 25).to_string() == "0.08");
    CHECK(Rational(15, 4).to_string() == "3.75");
    CHECK(Rational(2, 1).to_string() == "2");
    CHECK(Rational(7, 85).to_string() == "7/85");
    CHECK(Rational(-1, 8).to_string() == "-0.125");
}

TEST_CASE("arithmetic and ordering are exact") {
    CHECK(Rational(3, 4) + Rational(3, 4) + Rational(2, 4) == Rational(2, 1));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(6, 85) < Rational(7, 85));
    CHECK(Rational(7, 100) < Rational(6, 85));  // 0.07 < 0.0706
    CHECK(Rational(1, 10) == Rational::parse("0.1"));
}

TEST_CASE("decimal round trip through to_string") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
    std::uniform_int_distribution<int> pow2(0, 6), pow5(0, 4);
    for (int i = 0; i < 500; ++i) {
        std::int64_t den = (1 << pow2(rng));
        for (int k = pow5(rng); k > 0; --k) den *= 5;
        const Rational r(num(rng), den);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}
