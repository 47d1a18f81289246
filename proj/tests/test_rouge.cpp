#include <doctest.h>

#include <cmath>
#include <random>

#include "itemsum/rouge.hpp"
#include "oracle.hpp"

using namespace itemsum;

namespace {

std::vector<std::string> tok(const std::string& s) { return rouge_tokens(s); }

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len, int vocab) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> word(0, vocab - 1);
    std::vector<std::string> out(len(rng));
    for (auto& w : out) w = "w" + std::to_string(word(rng));
    return out;
}

}  // namespace

TEST_CASE("tokenizer") {
    CHECK(tok("The cat, sat!") == std::vector<std::string>{"the", "cat", "sat"});
    CHECK(rouge_tokens("running studies", {true}) == std::vector<std::string>{"run", "studi"});
}

TEST_CASE("rouge-n golden values") {
    const auto sys = tok("the cat sat on the mat");
    const auto model = tok("the cat lay on the mat");
    CHECK(rouge_n(sys, model, 1).recall == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(rouge_n(sys, model, 2).recall == doctest::Approx(3.0 / 5.0).epsilon(1e-15));
    const auto self1 = rouge_n(sys, sys, 1);
    const auto self2 = rouge_n(sys, sys, 2);
    CHECK(self1.recall == 1.0);
    CHECK(self1.precision == 1.0);
    CHECK(self1.f1 == 1.0);
    CHECK(self2.f1 == 1.0);
    // clipping: a repeated system token matches at most the model count
    CHECK(rouge_n(tok("the the the"), tok("the cat"), 1).recall == doctest::Approx(0.5));
    CHECK(rouge_n(tok("the the the"), tok("the cat"), 1).precision == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(rouge_n(sys, {}, 1), std::invalid_argument);
}

TEST_CASE("rouge-w golden values") {
    const double expect = std::pow(2.0 / std::pow(2.0, 1.2), 1.0 / 1.2);
    const auto sys = tok("a x b");
    const auto model = tok("a b");
    CHECK(oracle::brute_force_wlcs(sys, model, 1.2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(weighted_lcs(sys, model, 1.2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(rouge_w(sys, model).recall - expect) < 1e-6);
    CHECK(rouge_w(sys, model).recall == doctest::Approx(0.8909).epsilon(1e-4));
    CHECK(rouge_w(model, model).recall == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rouge_w(tok("p q r"), tok("a b")).recall == 0.0);
}

TEST_CASE("weighted LCS agrees with brute-force alignment") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 300; ++round) {
        const auto a = random_tokens(rng, 6, 3);
        const auto b = random_tokens(rng, 6, 3);
        const double dp = weighted_lcs(a, b, 1.2);
        const double brute = oracle::brute_force_wlcs(a, b, 1.2);
        // the dynamic program extends runs greedily, so it never exceeds the best alignment
        CHECK(dp <= brute + 1e-9);
        if (brute > 0.0) CHECK(dp >= 1.0 - 1e-12);
        CHECK(weighted_lcs(a, a, 1.2) == doctest::Approx(std::pow(static_cast<double>(a.size()), 1.2)));
    }
}

TEST_CASE("rouge-su golden values") {
    CHECK(rouge_su(tok("a b c"), tok("a b d")).recall == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rouge_su(tok("x"), tok("x")).recall == 1.0);
    CHECK(rouge_su(tok("a b c d e f g"), tok("a b c d e f g")).f1 == doctest::Approx(1.0));
    for (std::size_t len = 0; len <= 10; ++len) {
        std::vector<std::string> t(len);
        for (std::size_t i = 0; i < len; ++i) t[i] = "t" + std::to_string(i);
        CAPTURE(len);
        CHECK(su_unit_count(len) == oracle::units_total(oracle::su_units(t, 5)));
    }
}

TEST_CASE("rouge-n and rouge-su agree with multiset enumeration") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const auto sys = random_tokens(rng, 12, 5);
        const auto model = random_tokens(rng, 12, 5);
        for (int n : {1, 2}) {
            const auto gs = oracle::ngrams(sys, n), gm = oracle::ngrams(model, n);
            const double match = static_cast<double>(oracle::clipped(gs, gm));
            const auto total_m = oracle::units_total(gm);
            const auto got = rouge_n(sys, model, n);
            CHECK(got.recall == doctest::Approx(total_m ? match / total_m : 0.0));
        }
        const auto us = oracle::su_units(sys, 5), um = oracle::su_units(model, 5);
        const double match = static_cast<double>(oracle::clipped(us, um));
        const auto got = rouge_su(sys, model);
        CHECK(got.recall == doctest::Approx(match / oracle::units_total(um)));
        CHECK(got.precision == doctest::Approx(match / oracle::units_total(us)));
    }
}

TEST_CASE("property: bounds, identity and swap symmetry") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 200; ++round) {
        const auto a = random_tokens(rng, 10, 4);
        const auto b = random_tokens(rng, 10, 4);
        for (auto m : all_rouge_metrics()) {
            const auto ab = rouge_pair(m, a, b);
            const auto ba = rouge_pair(m, b, a);
            CHECK(ab.recall >= 0.0);
            CHECK(ab.recall <= 1.0 + 1e-12);
            CHECK(ab.precision <= 1.0 + 1e-12);
            CHECK(ab.recall == doctest::Approx(ba.precision));
            CHECK(ab.f1 == doctest::Approx(ba.f1));
            if (a.size() > 1 || m != RougeMetric::r2) {
                CHECK(rouge_pair(m, a, a).recall == doctest::Approx(1.0));
            }
        }
    }
}

TEST_CASE("f1 is the harmonic mean") {
    CHECK(RougeScore::from(0.5, 1.0).f1 == doctest::Approx(2.0 / 3.0));
    CHECK(RougeScore::from(0.0, 0.0).f1 == 0.0);
}

TEST_CASE("multiple models report the best-recall model") {
    const std::string sys = "the cat sat on the mat";
    const auto one = evaluate_summary(sys, {"the cat lay on the mat"});
    for (auto m : all_rouge_metrics()) {
        CHECK(one.at(m).recall == doctest::Approx(rouge_pair(m, tok(sys), tok("the cat lay on the mat")).recall));
    }
    const auto with_self = evaluate_summary(sys, {"a dog ran", sys});
    for (auto m : all_rouge_metrics()) CHECK(with_self.at(m).recall == doctest::Approx(1.0));

    const std::vector<std::string> models = {"the dog sat on a mat today", "cat on mat"};
    const auto best = evaluate_summary(sys, models);
    for (auto m : all_rouge_metrics()) {
        const double r0 = rouge_pair(m, tok(sys), tok(models[0])).recall;
        const double r1 = rouge_pair(m, tok(sys), tok(models[1])).recall;
        CHECK(best.at(m).recall == doctest::Approx(std::max(r0, r1)));
    }
    CHECK_THROWS_AS(evaluate_summary(sys, {}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_summary(sys, {"  ,, "}), std::invalid_argument);
}

TEST_CASE("metric names") {
    CHECK(parse_rouge_metrics("all") == all_rouge_metrics());
    CHECK(parse_rouge_metrics("RSU4,R2,R2") == std::vector<RougeMetric>{RougeMetric::r2, RougeMetric::rsu4});
    CHECK(to_string(RougeMetric::rw12) == "RW12");
    CHECK_THROWS(parse_rouge_metrics("R3"));
}
