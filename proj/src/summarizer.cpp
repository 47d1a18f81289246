#include "itemsum/summarizer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace itemsum {

std::vector<SentenceScore> score_sentences_weighted(const std::vector<FrequentItemset>& itemsets,
                                                    const std::vector<Rational>& weights, const TransactionSet& ts) {
    if (weights.size() != itemsets.size()) {
        throw std::invalid_argument("one weight per itemset required");
    }
    std::vector<SentenceScore> scores;
    scores.reserve(ts.total());
    for (const auto& t : ts.transactions()) {
        SentenceScore s{t.index, Rational(0, 1), 0};
        for (std::size_t f = 0; f < itemsets.size(); ++f) {
            const auto& items = itemsets[f].items;
            if (std::includes(t.items.begin(), t.items.end(), items.begin(), items.end())) {
                s.score += weights[f];
                ++s.covering_itemsets;
            }
        }
        scores.push_back(s);
    }
    return scores;
}

std::vector<SentenceScore> score_sentences(const std::vector<FrequentItemset>& itemsets, const TransactionSet& ts) {
    std::vector<Rational> weights;
    weights.reserve(itemsets.size());
    for (const auto& fi : itemsets) weights.push_back(fi.support.value());
    return score_sentences_weighted(itemsets, weights, ts);
}

std::size_t compression_to_count(const Rational& rate, std::size_t total_sentences) {
    if (rate <= Rational(0, 1) || rate >= Rational(1, 1)) {
        throw std::invalid_argument("compression rate must lie in (0, 1), got " + rate.to_string());
    }
    if (total_sentences == 0) {
        throw std::invalid_argument("compression of an empty document");
    }
    // floor(rate * S + 1/2) in integers
    const auto num = static_cast<__int128>(rate.num()) * static_cast<__int128>(total_sentences);
    const auto den = static_cast<__int128>(rate.den());
    auto n = static_cast<std::size_t>((2 * num + den) / (2 * den));
    return std::clamp<std::size_t>(n, 1, total_sentences);
}

std::vector<std::size_t> select_sentences(const std::vector<SentenceScore>& scores, const Document& doc,
                                          std::size_t n) {
    if (n > doc.size()) {
        throw std::invalid_argument("cannot select " + std::to_string(n) + " of " + std::to_string(doc.size()) +
                                    " sentences");
    }
    if (scores.size() != doc.size()) {
        throw std::invalid_argument("score list does not match the document");
    }
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& sa = scores[a];
        const auto& sb = scores[b];
        if (auto c = sa.score <=> sb.score; c != 0) return c > 0;
        const auto wa = doc.sentences[sa.sentence_index].word_count;
        const auto wb = doc.sentences[sb.sentence_index].word_count;
        if (wa != wb) return wa < wb;
        return sa.sentence_index < sb.sentence_index;
    });
    std::vector<std::size_t> selected;
    selected.reserve(n);
    for (std::size_t r = 0; r < n; ++r) selected.push_back(scores[order[r]].sentence_index);
    std::sort(selected.begin(), selected.end());
    return selected;
}

std::string render_summary(const Document& doc, const std::vector<std::size_t>& selected_indices) {
    std::string out;
    for (std::size_t i = 0; i < selected_indices.size(); ++i) {
        if (i > 0) out += '\n';
        out += doc.sentences.at(selected_indices[i]).text;
    }
    return out;
}

SummaryResult lead_baseline(const Document& doc, std::size_t n) {
    if (n > doc.size()) {
        throw std::invalid_argument("lead baseline: N exceeds sentence count");
    }
    SummaryResult r;
    r.selected_indices.resize(n);
    std::iota(r.selected_indices.begin(), r.selected_indices.end(), 0);
    r.rendered_text = render_summary(doc, r.selected_indices);
    return r;
}

namespace {

// Uniform in [0, bound) by rejection on the raw 64-bit engine output.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = engine();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

SummaryResult random_baseline(const Document& doc, std::size_t n, std::uint64_t seed) {
    if (n > doc.size()) {
        throw std::invalid_argument("random baseline: N exceeds sentence count");
    }
    std::mt19937_64 engine(seed);
    std::vector<std::size_t> pool(doc.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_below(engine, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    SummaryResult r;
    r.selected_indices.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(r.selected_indices.begin(), r.selected_indices.end());
    r.rendered_text = render_summary(doc, r.selected_indices);
    return r;
}

SummaryResult summarize(const Document& doc, const TransactionSet& ts, const std::vector<FrequentItemset>& itemsets,
                        std::size_t n) {
    if (ts.total() != doc.size()) {
        throw std::invalid_argument("transaction set does not match the document");
    }
    SummaryResult r;
    r.scores = score_sentences(itemsets, ts);
    r.selected_indices = select_sentences(r.scores, doc, n);
    r.rendered_text = render_summary(doc, r.selected_indices);
    return r;
}

}  // namespace itemsum
