#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itemsum/document.hpp"
#include "itemsum/text.hpp"

namespace itemsum {

class AnnotationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Concept {
    std::string concept_id;
    std::string preferred_name;
    std::string semantic_type;
    friend bool operator==(const Concept&, const Concept&) = default;
};

/// Concepts a mapper produced for one sentence. Every candidate mapping of
/// a phrase is kept.
struct ConceptAnnotation {
    std::size_t sentence_index = 0;
    std::vector<Concept> concepts;
    friend bool operator==(const ConceptAnnotation&, const ConceptAnnotation&) = default;
};

/// Item identity is `key` alone; `display` is for humans.
struct Item {
    std::string key;
    std::string display;

    friend bool operator==(const Item& a, const Item& b) { return a.key == b.key; }
    friend auto operator<=>(const Item& a, const Item& b) { return a.key <=> b.key; }
};

/// Sorted by key, unique.
using ItemSet = std::vector<Item>;

enum class ItemMode { concept_ids, terms };

ItemMode parse_item_mode(std::string_view name);  // "concept" | "term"
std::string_view to_string(ItemMode mode);

/// JSON-lines: {"sentence_index": int, "concepts": [{"concept_id", "preferred_name", "semantic_type"}]}.
/// Blank lines are skipped. Schema errors carry the 1-based line number.
std::vector<ConceptAnnotation> parse_concept_annotations(std::string_view jsonl);
std::vector<ConceptAnnotation> load_concept_annotations(const std::filesystem::path& path);

/// Removes concepts whose semantic type (case-insensitive) is blocked.
/// `blocked_types` must hold lowercase names.
std::vector<ConceptAnnotation> filter_semantic_types(const std::vector<ConceptAnnotation>& annotations,
                                                     const WordSet& blocked_types = default_blocked_semantic_types());

/// Lowercases the entries of a semantic-type list.
WordSet make_blocked_types(const std::vector<std::string>& names);

/// Annotations indexed by sentence; lines for the same sentence are merged.
class AnnotationTable {
public:
    AnnotationTable() = default;
    explicit AnnotationTable(const std::vector<ConceptAnnotation>& annotations);

    /// Throws AnnotationError when an annotation points past the document.
    void check_against(std::size_t sentence_count) const;

    const std::vector<Concept>* find(std::size_t sentence_index) const;

private:
    std::map<std::size_t, std::vector<Concept>> by_sentence_;
};

/// Distinct concept ids of a sentence; missing annotation gives the empty set.
ItemSet concept_items(std::size_t sentence_index, const AnnotationTable& filtered);

/// Lowercase, split on non-alphanumerics, drop stop-words, Porter-stem.
ItemSet term_items(std::string_view sentence_text, const WordSet& stopwords = default_stopwords());
inline ItemSet term_items(const Sentence& sentence, const WordSet& stopwords = default_stopwords()) {
    return term_items(sentence.text, stopwords);
}

}  // namespace itemsum
