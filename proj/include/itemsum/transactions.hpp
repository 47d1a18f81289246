#pragma once

#include <map>
#include <string>
#include <vector>

#include "itemsum/annotation.hpp"
#include "itemsum/document.hpp"

namespace itemsum {

/// Item keys of one sentence, sorted and unique.
struct Transaction {
    std::size_t index = 0;
    std::vector<std::string> items;
    friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// One transaction per sentence, empty ones included, so that support
/// denominators equal the sentence count.
class TransactionSet {
public:
    TransactionSet() = default;
    /// Each inner vector is one transaction's item keys, in any order.
    explicit TransactionSet(const std::vector<std::vector<std::string>>& item_lists);

    const std::vector<Transaction>& transactions() const { return transactions_; }
    const std::vector<std::string>& item_universe() const { return universe_; }  // sorted
    std::size_t total() const { return transactions_.size(); }

    /// Display name for an item key; the key itself when none was recorded.
    const std::string& display(const std::string& key) const;
    void set_display(const std::string& key, std::string name);

    friend bool operator==(const TransactionSet& a, const TransactionSet& b) {
        return a.transactions_ == b.transactions_;
    }

private:
    std::vector<Transaction> transactions_;
    std::vector<std::string> universe_;
    std::map<std::string, std::string> display_;
};

/// Side inputs for either item mode.
struct ItemSource {
    ItemMode mode = ItemMode::concept_ids;
    AnnotationTable annotations;             // concept mode, already type-filtered
    WordSet stopwords = default_stopwords();  // term mode
};

/// Throws AnnotationError when an annotation names a sentence past the end.
TransactionSet build_transactions(const Document& doc, const ItemSource& source);

/// {"total": int, "transactions": [{"index": int, "items": [str]}]}
std::string transactions_to_json(const TransactionSet& ts);

}  // namespace itemsum
