#include "itemsum/transactions.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace itemsum {

TransactionSet::TransactionSet(const std::vector<std::vector<std::string>>& item_lists) {
    std::set<std::string> universe;
    transactions_.reserve(item_lists.size());
    for (std::size_t i = 0; i < item_lists.size(); ++i) {
        Transaction t{i, item_lists[i]};
        std::sort(t.items.begin(), t.items.end());
        t.items.erase(std::unique(t.items.begin(), t.items.end()), t.items.end());
        universe.insert(t.items.begin(), t.items.end());
        transactions_.push_back(std::move(t));
    }
    universe_.assign(universe.begin(), universe.end());
}

const std::string& TransactionSet::display(const std::string& key) const {
    auto it = display_.find(key);
    return it == display_.end() ? key : it->second;
}

void TransactionSet::set_display(const std::string& key, std::string name) {
    display_.try_emplace(key, std::move(name));
}

TransactionSet build_transactions(const Document& doc, const ItemSource& source) {
    if (source.mode == ItemMode::concept_ids) {
        source.annotations.check_against(doc.size());
    }
    std::vector<std::vector<std::string>> lists;
    std::vector<std::pair<std::string, std::string>> names;
    lists.reserve(doc.size());
    for (const auto& s : doc.sentences) {
        ItemSet items = source.mode == ItemMode::concept_ids ? concept_items(s.index, source.annotations)
                                                             : term_items(s, source.stopwords);
        std::vector<std::string> keys;
        keys.reserve(items.size());
        for (auto& item : items) {
            keys.push_back(item.key);
            names.emplace_back(std::move(item.key), std::move(item.display));
        }
        lists.push_back(std::move(keys));
    }
    TransactionSet ts(lists);
    for (auto& [key, name] : names) ts.set_display(key, std::move(name));
    return ts;
}

std::string transactions_to_json(const TransactionSet& ts) {
    nlohmann::ordered_json j;
    j["total"] = ts.total();
    auto& arr = j["transactions"] = nlohmann::ordered_json::array();
    for (const auto& t : ts.transactions()) {
        arr.push_back({{"index", t.index}, {"items", t.items}});
    }
    return j.dump(2) + "\n";
}

}  // namespace itemsum
