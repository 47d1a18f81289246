#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itemsum/rational.hpp"
#include "itemsum/transactions.hpp"

namespace itemsum {

/// count of covering transactions over the transaction total.
struct SupportFraction {
    std::size_t count = 0;
    std::size_t total = 1;

    Rational value() const {
        return {static_cast<std::int64_t>(count), static_cast<std::int64_t>(total)};
    }
    /// Truncated to three decimals (9/85 -> 0.105). Display only.
    double display() const;

    /// Exact: count / total >= threshold.
    bool at_least(const Rational& threshold) const;

    friend bool operator==(const SupportFraction&, const SupportFraction&) = default;
};

struct FrequentItemset {
    std::vector<std::string> items;  // sorted, non-empty
    SupportFraction support;
    friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

struct MinerConfig {
    Rational min_sup{8, 100};
    std::optional<std::size_t> max_itemset_size;

    /// Throws std::invalid_argument unless 0 < min_sup <= 1 and any size cap is positive.
    void validate() const;
};

/// Transactions that contain every item of `itemset`. Throws on an empty itemset.
SupportFraction support(const std::vector<std::string>& itemset, const TransactionSet& ts);

bool is_frequent(const std::vector<std::string>& itemset, const TransactionSet& ts, const Rational& min_sup);

/// Level-wise Apriori: frequent 1-itemsets first, then size-k candidates
/// joined from frequent (k-1)-itemsets sharing their first k-2 items and
/// pruned when any (k-1)-subset is infrequent. Output is in canonical order
/// (descending support, then ascending item lists).
std::vector<FrequentItemset> apriori(const TransactionSet& ts, const MinerConfig& config);

/// Canonical ordering used by apriori() and the JSON dump.
void sort_canonical(std::vector<FrequentItemset>& itemsets);

/// counts[k] = number of itemsets with k items; counts[0] is unused.
std::vector<std::size_t> count_by_size(const std::vector<FrequentItemset>& itemsets);

/// [{"items": [str], "count": int, "total": int, "support": float}], canonical order.
std::string itemsets_to_json(const std::vector<FrequentItemset>& itemsets);

/// Inverse of itemsets_to_json; the float field is ignored.
std::vector<FrequentItemset> itemsets_from_json(const std::string& text);

}  // namespace itemsum
