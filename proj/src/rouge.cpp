#include "itemsum/rouge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "itemsum/porter.hpp"
#include "itemsum/text.hpp"

namespace itemsum {

const std::vector<RougeMetric>& all_rouge_metrics() {
    static const std::vector<RougeMetric> all{RougeMetric::r1, RougeMetric::r2, RougeMetric::rw12, RougeMetric::rsu4};
    return all;
}

std::string_view to_string(RougeMetric m) {
    switch (m) {
        case RougeMetric::r1: return "R1";
        case RougeMetric::r2: return "R2";
        case RougeMetric::rw12: return "RW12";
        case RougeMetric::rsu4: return "RSU4";
    }
    return "R1";
}

RougeMetric parse_rouge_metric(std::string_view name) {
    std::string n = to_lower_ascii(trim(name));
    n.erase(std::remove(n.begin(), n.end(), '-'), n.end());
    n.erase(std::remove(n.begin(), n.end(), '.'), n.end());
    if (n == "r1" || n == "rouge1") return RougeMetric::r1;
    if (n == "r2" || n == "rouge2") return RougeMetric::r2;
    if (n == "rw12" || n == "rougew12" || n == "rw") return RougeMetric::rw12;
    if (n == "rsu4" || n == "rougesu4" || n == "su4") return RougeMetric::rsu4;
    throw std::invalid_argument("unknown ROUGE metric: " + std::string(name));
}

std::vector<RougeMetric> parse_rouge_metrics(std::string_view list) {
    if (trim(list) == "all") return all_rouge_metrics();
    std::vector<RougeMetric> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string_view::npos) comma = list.size();
        auto part = trim(list.substr(pos, comma - pos));
        if (!part.empty()) {
            auto m = parse_rouge_metric(part);
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty metric list");
    std::sort(out.begin(), out.end());
    return out;
}

RougeScore RougeScore::from(double recall, double precision) {
    RougeScore s;
    s.recall = recall;
    s.precision = precision;
    s.f1 = (recall + precision) > 0.0 ? 2.0 * recall * precision / (recall + precision) : 0.0;
    return s;
}

std::vector<std::string> rouge_tokens(std::string_view text, const TokenizerOptions& opts) {
    auto tokens = alnum_tokens(text);
    if (opts.stem) {
        for (auto& t : tokens) t = porter_stem(t);
    }
    return tokens;
}

namespace {

using Counts = std::unordered_map<std::string, std::size_t>;

void require_model(const std::vector<std::string>& model) {
    if (model.empty()) throw std::invalid_argument("empty model summary");
}

std::string join_key(const std::vector<std::string>& tokens, std::size_t from, std::size_t n) {
    std::string key = tokens[from];
    for (std::size_t i = 1; i < n; ++i) {
        key += '\x1f';
        key += tokens[from + i];
    }
    return key;
}

Counts ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
    Counts c;
    if (tokens.size() < n) return c;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++c[join_key(tokens, i, n)];
    return c;
}

Counts su_counts(const std::vector<std::string>& tokens, int max_skip) {
    Counts c;
    const std::size_t span = static_cast<std::size_t>(max_skip) + 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        ++c[tokens[i]];
        for (std::size_t j = i + 1; j < tokens.size() && j <= i + span; ++j) {
            // '\x1e' keeps skip-bigrams apart from unigrams and n-grams
            ++c[tokens[i] + '\x1e' + tokens[j]];
        }
    }
    return c;
}

std::size_t total(const Counts& c) {
    std::size_t n = 0;
    for (const auto& [k, v] : c) n += v;
    return n;
}

std::size_t clipped_overlap(const Counts& sys, const Counts& model) {
    std::size_t m = 0;
    for (const auto& [k, v] : sys) {
        if (auto it = model.find(k); it != model.end()) m += std::min(v, it->second);
    }
    return m;
}

RougeScore overlap_score(const Counts& sys, const Counts& model) {
    const std::size_t match = clipped_overlap(sys, model);
    const std::size_t model_total = total(model);
    const std::size_t sys_total = total(sys);
    const double recall = model_total ? static_cast<double>(match) / static_cast<double>(model_total) : 0.0;
    const double precision = sys_total ? static_cast<double>(match) / static_cast<double>(sys_total) : 0.0;
    return RougeScore::from(recall, precision);
}

}  // namespace

RougeScore rouge_n(const std::vector<std::string>& system, const std::vector<std::string>& model, int n) {
    require_model(model);
    if (n < 1) throw std::invalid_argument("n-gram order must be positive");
    const auto order = static_cast<std::size_t>(n);
    return overlap_score(ngram_counts(system, order), ngram_counts(model, order));
}

double weighted_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b, double weight) {
    const std::size_t rows = a.size();
    const std::size_t cols = b.size();
    auto f = [weight](double k) { return std::pow(k, weight); };
    // c: accumulated weighted score; w: length of the consecutive run ending here
    std::vector<double> c((rows + 1) * (cols + 1), 0.0);
    std::vector<std::size_t> w((rows + 1) * (cols + 1), 0);
    auto at = [cols](std::size_t i, std::size_t j) { return i * (cols + 1) + j; };
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j <= cols; ++j) {
            if (a[i - 1] == b[j - 1]) {
                const std::size_t k = w[at(i - 1, j - 1)];
                c[at(i, j)] = c[at(i - 1, j - 1)] + f(static_cast<double>(k + 1)) - f(static_cast<double>(k));
                w[at(i, j)] = k + 1;
            } else if (c[at(i - 1, j)] > c[at(i, j - 1)]) {
                c[at(i, j)] = c[at(i - 1, j)];
            } else {
                c[at(i, j)] = c[at(i, j - 1)];
            }
        }
    }
    return c[at(rows, cols)];
}

RougeScore rouge_w(const std::vector<std::string>& system, const std::vector<std::string>& model, double weight) {
    require_model(model);
    if (!(weight > 1.0)) throw std::invalid_argument("ROUGE-W weight must exceed 1");
    if (system.empty()) return RougeScore::from(0.0, 0.0);
    const double wlcs = weighted_lcs(model, system, weight);
    auto f = [weight](double k) { return std::pow(k, weight); };
    auto f_inv = [weight](double x) { return std::pow(x, 1.0 / weight); };
    const double recall = f_inv(wlcs / f(static_cast<double>(model.size())));
    const double precision = f_inv(wlcs / f(static_cast<double>(system.size())));
    return RougeScore::from(std::min(recall, 1.0), std::min(precision, 1.0));
}

RougeScore rouge_su(const std::vector<std::string>& system, const std::vector<std::string>& model, int max_skip) {
    require_model(model);
    if (max_skip < 0) throw std::invalid_argument("skip distance must be non-negative");
    return overlap_score(su_counts(system, max_skip), su_counts(model, max_skip));
}

std::size_t su_unit_count(std::size_t length, int max_skip) {
    const std::size_t span = static_cast<std::size_t>(max_skip) + 1;
    std::size_t n = length;
    for (std::size_t i = 0; i < length; ++i) n += std::min(span, length - 1 - i);
    return n;
}

RougeScore rouge_pair(RougeMetric metric, const std::vector<std::string>& system, const std::vector<std::string>& model) {
    switch (metric) {
        case RougeMetric::r1: return rouge_n(system, model, 1);
        case RougeMetric::r2: return rouge_n(system, model, 2);
        case RougeMetric::rw12: return rouge_w(system, model, 1.2);
        case RougeMetric::rsu4: return rouge_su(system, model, 4);
    }
    throw std::invalid_argument("unknown metric");
}

std::map<RougeMetric, RougeScore> evaluate_summary(std::string_view system_text,
                                                   const std::vector<std::string>& model_texts,
                                                   const std::vector<RougeMetric>& metrics,
                                                   const TokenizerOptions& opts) {
    if (model_texts.empty()) throw std::invalid_argument("at least one model summary is required");
    const auto system = rouge_tokens(system_text, opts);
    std::vector<std::vector<std::string>> models;
    models.reserve(model_texts.size());
    for (const auto& m : model_texts) models.push_back(rouge_tokens(m, opts));

    std::map<RougeMetric, RougeScore> out;
    for (auto metric : metrics) {
        RougeScore best;
        bool first = true;
        for (const auto& model : models) {
            RougeScore s = rouge_pair(metric, system, model);
            if (first || s.recall > best.recall) best = s;
            first = false;
        }
        out[metric] = best;
    }
    return out;
}

}  // namespace itemsum
