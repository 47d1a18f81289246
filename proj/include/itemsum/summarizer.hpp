#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itemsum/document.hpp"
#include "itemsum/miner.hpp"
#include "itemsum/rational.hpp"
#include "itemsum/transactions.hpp"

namespace itemsum {

struct SentenceScore {
    std::size_t sentence_index = 0;
    Rational score;  // sum of supports of the frequent itemsets covering the sentence
    std::size_t covering_itemsets = 0;
    friend bool operator==(const SentenceScore&, const SentenceScore&) = default;
};

struct SummaryResult {
    std::vector<std::size_t> selected_indices;  // ascending
    std::vector<SentenceScore> scores;          // every sentence; empty for baselines
    std::string rendered_text;
};

/// Sentence score = sum of support over every frequent itemset contained in
/// the sentence's transaction.
std::vector<SentenceScore> score_sentences(const std::vector<FrequentItemset>& itemsets, const TransactionSet& ts);

/// Same, with caller-supplied weights (one per itemset) in place of supports.
std::vector<SentenceScore> score_sentences_weighted(const std::vector<FrequentItemset>& itemsets,
                                                    const std::vector<Rational>& weights, const TransactionSet& ts);

/// N = max(1, round-half-up(rate * S)), capped at S. Requires 0 < rate < 1 and S >= 1.
std::size_t compression_to_count(const Rational& rate, std::size_t total_sentences);

/// Ranks by descending score, then ascending word count, then ascending
/// index; keeps the first N and returns them in document order.
std::vector<std::size_t> select_sentences(const std::vector<SentenceScore>& scores, const Document& doc,
                                          std::size_t n);

/// Selected sentence texts joined by single newlines.
std::string render_summary(const Document& doc, const std::vector<std::size_t>& selected_indices);

SummaryResult lead_baseline(const Document& doc, std::size_t n);

/// N distinct indices drawn uniformly without replacement: a partial
/// Fisher-Yates shuffle driven by std::mt19937_64 seeded with `seed`, with
/// bounded draws taken by rejection sampling so results do not depend on
/// the standard library's distribution implementations.
SummaryResult random_baseline(const Document& doc, std::size_t n, std::uint64_t seed);

/// Score, select and render in one call.
SummaryResult summarize(const Document& doc, const TransactionSet& ts, const std::vector<FrequentItemset>& itemsets,
                        std::size_t n);

}  // namespace itemsum
