#include "itemsum/miner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <json.hpp>

namespace itemsum {

double SupportFraction::display() const {
    const std::size_t thousandths = count * 1000 / total;
    return static_cast<double>(thousandths) / 1000.0;
}

bool SupportFraction::at_least(const Rational& threshold) const {
    return value() >= threshold;
}

void MinerConfig::validate() const {
    if (min_sup <= Rational(0, 1) || min_sup > Rational(1, 1)) {
        throw std::invalid_argument("min_sup must lie in (0, 1], got " + min_sup.to_string());
    }
    if (max_itemset_size && *max_itemset_size == 0) {
        throw std::invalid_argument("max_itemset_size must be positive");
    }
}

SupportFraction support(const std::vector<std::string>& itemset, const TransactionSet& ts) {
    if (itemset.empty()) {
        throw std::invalid_argument("support of an empty itemset is undefined");
    }
    std::vector<std::string> wanted = itemset;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    std::size_t count = 0;
    for (const auto& t : ts.transactions()) {
        if (std::includes(t.items.begin(), t.items.end(), wanted.begin(), wanted.end())) ++count;
    }
    return {count, ts.total()};
}

bool is_frequent(const std::vector<std::string>& itemset, const TransactionSet& ts, const Rational& min_sup) {
    return support(itemset, ts).at_least(min_sup);
}

namespace {

// Vertical layout: one bitset of covered transactions per item.
class CoverIndex {
public:
    explicit CoverIndex(const TransactionSet& ts)
        : words_((ts.total() + 63) / 64), covers_(ts.item_universe().size(), std::vector<std::uint64_t>(words_)) {
        const auto& universe = ts.item_universe();
        for (const auto& t : ts.transactions()) {
            for (const auto& key : t.items) {
                auto id = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), key) - universe.begin());
                covers_[id][t.index / 64] |= std::uint64_t{1} << (t.index % 64);
            }
        }
    }

    std::size_t count(const std::vector<int>& itemset, std::vector<std::uint64_t>& scratch) const {
        scratch = covers_[static_cast<std::size_t>(itemset.front())];
        for (std::size_t i = 1; i < itemset.size(); ++i) {
            const auto& c = covers_[static_cast<std::size_t>(itemset[i])];
            for (std::size_t w = 0; w < words_; ++w) scratch[w] &= c[w];
        }
        std::size_t n = 0;
        for (auto w : scratch) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

private:
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> covers_;
};

using Level = std::vector<std::pair<std::vector<int>, std::size_t>>;  // sorted by itemset

bool contains_itemset(const Level& level, const std::vector<int>& itemset) {
    auto it = std::lower_bound(level.begin(), level.end(), itemset,
                               [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
    return it != level.end() && it->first == itemset;
}

// Join step plus subset prune. `prev` is sorted, so itemsets sharing a
// (k-2)-prefix are contiguous.
std::vector<std::vector<int>> generate_candidates(const Level& prev) {
    std::vector<std::vector<int>> candidates;
    const std::size_t n = prev.size();
    std::vector<int> subset;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = prev[i].first;
        const std::size_t prefix = a.size() - 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& b = prev[j].first;
            if (!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(prefix), b.begin())) break;
            std::vector<int> cand = a;
            cand.push_back(b.back());
            // the two subsets missing one of the last two items are a and b
            bool keep = true;
            for (std::size_t drop = 0; keep && drop + 2 < cand.size(); ++drop) {
                subset.clear();
                for (std::size_t m = 0; m < cand.size(); ++m) {
                    if (m != drop) subset.push_back(cand[m]);
                }
                keep = contains_itemset(prev, subset);
            }
            if (keep) candidates.push_back(std::move(cand));
        }
    }
    return candidates;
}

}  // namespace

std::vector<FrequentItemset> apriori(const TransactionSet& ts, const MinerConfig& config) {
    config.validate();
    const auto& universe = ts.item_universe();
    const std::size_t total = ts.total();
    std::vector<FrequentItemset> out;
    if (total == 0 || universe.empty()) return out;

    const CoverIndex index(ts);
    std::vector<std::uint64_t> scratch;
    auto frequent = [&](std::size_t count) { return SupportFraction{count, total}.at_least(config.min_sup); };
    auto emit = [&](const Level& level) {
        for (const auto& [ids, count] : level) {
            FrequentItemset fi;
            fi.items.reserve(ids.size());
            for (int id : ids) fi.items.push_back(universe[static_cast<std::size_t>(id)]);
            fi.support = {count, total};
            out.push_back(std::move(fi));
        }
    };

    Level level;
    for (std::size_t id = 0; id < universe.size(); ++id) {
        std::vector<int> single{static_cast<int>(id)};
        std::size_t count = index.count(single, scratch);
        if (frequent(count)) level.emplace_back(std::move(single), count);
    }

    std::size_t k = 1;
    while (!level.empty()) {
        emit(level);
        if (config.max_itemset_size && k >= *config.max_itemset_size) break;
        Level next;
        for (auto& cand : generate_candidates(level)) {
            std::size_t count = index.count(cand, scratch);
            if (frequent(count)) next.emplace_back(std::move(cand), count);
        }
        level = std::move(next);
        ++k;
    }
    sort_canonical(out);
    return out;
}

void sort_canonical(std::vector<FrequentItemset>& itemsets) {
    std::sort(itemsets.begin(), itemsets.end(), [](const FrequentItemset& a, const FrequentItemset& b) {
        // supports share one denominator within a document, but compare exactly anyway
        auto cmp = a.support.value() <=> b.support.value();
        if (cmp != 0) return cmp > 0;
        return a.items < b.items;
    });
}

std::vector<std::size_t> count_by_size(const std::vector<FrequentItemset>& itemsets) {
    std::vector<std::size_t> counts(1, 0);
    for (const auto& fi : itemsets) {
        if (fi.items.size() >= counts.size()) counts.resize(fi.items.size() + 1, 0);
        ++counts[fi.items.size()];
    }
    return counts;
}

std::string itemsets_to_json(const std::vector<FrequentItemset>& itemsets) {
    std::vector<FrequentItemset> sorted = itemsets;
    sort_canonical(sorted);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& fi : sorted) {
        arr.push_back({{"items", fi.items},
                       {"count", fi.support.count},
                       {"total", fi.support.total},
                       {"support", fi.support.display()}});
    }
    return arr.dump(2) + "\n";
}

std::vector<FrequentItemset> itemsets_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<FrequentItemset> out;
    for (const auto& e : j) {
        FrequentItemset fi;
        fi.items = e.at("items").get<std::vector<std::string>>();
        fi.support = {e.at("count").get<std::size_t>(), e.at("total").get<std::size_t>()};
        out.push_back(std::move(fi));
    }
    return out;
}

}  // namespace itemsum
