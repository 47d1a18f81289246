#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace itemsum {

enum class RougeMetric { r1, r2, rw12, rsu4 };

const std::vector<RougeMetric>& all_rouge_metrics();
std::string_view to_string(RougeMetric m);  // "R1", "R2", "RW12", "RSU4"
RougeMetric parse_rouge_metric(std::string_view name);
/// Comma-separated list; "all" selects the four metrics.
std::vector<RougeMetric> parse_rouge_metrics(std::string_view list);

struct RougeScore {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;

    static RougeScore from(double recall, double precision);
};

struct TokenizerOptions {
    bool stem = false;
};

/// Lowercased alphanumeric runs, optionally Porter-stemmed. Used for both
/// system and model texts.
std::vector<std::string> rouge_tokens(std::string_view text, const TokenizerOptions& opts = {});

// Pairwise scores. Each throws std::invalid_argument for an empty model.
RougeScore rouge_n(const std::vector<std::string>& system, const std::vector<std::string>& model, int n);

/// Weighted LCS with f(k) = k^weight; recall = f^-1(WLCS / f(m)), precision
/// = f^-1(WLCS / f(s)).
RougeScore rouge_w(const std::vector<std::string>& system, const std::vector<std::string>& model, double weight = 1.2);

/// Unigrams plus ordered pairs (t_i, t_j) with i < j <= i + max_skip + 1.
RougeScore rouge_su(const std::vector<std::string>& system, const std::vector<std::string>& model, int max_skip = 4);

/// Weighted-LCS accumulator of the rouge_w dynamic program.
double weighted_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b, double weight);

/// Number of SU counting units in a text of `length` tokens.
std::size_t su_unit_count(std::size_t length, int max_skip = 4);

RougeScore rouge_pair(RougeMetric metric, const std::vector<std::string>& system, const std::vector<std::string>& model);

/// Against several models, each metric reports the scores of the model with
/// the highest recall (first one on ties). Throws on an empty model list.
std::map<RougeMetric, RougeScore> evaluate_summary(std::string_view system_text,
                                                   const std::vector<std::string>& model_texts,
                                                   const std::vector<RougeMetric>& metrics = all_rouge_metrics(),
                                                   const TokenizerOptions& opts = {});

}  // namespace itemsum
