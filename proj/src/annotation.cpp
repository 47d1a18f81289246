#include "itemsum/annotation.hpp"

#include <algorithm>

#include <json.hpp>

#include "itemsum/porter.hpp"

namespace itemsum {

using nlohmann::json;

ItemMode parse_item_mode(std::string_view name) {
    if (name == "concept") return ItemMode::concept_ids;
    if (name == "term") return ItemMode::terms;
    throw std::invalid_argument("unknown mode: " + std::string(name) + " (expected concept or term)");
}

std::string_view to_string(ItemMode mode) {
    return mode == ItemMode::concept_ids ? "concept" : "term";
}

namespace {

std::string required_string(const json& obj, const char* field, std::size_t line) {
    if (!obj.contains(field) || !obj[field].is_string()) {
        throw AnnotationError("annotation line " + std::to_string(line) + ": missing string field '" + field + "'");
    }
    return obj[field].get<std::string>();
}

ItemSet normalize(std::vector<Item> items) {
    std::stable_sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

}  // namespace

std::vector<ConceptAnnotation> parse_concept_annotations(std::string_view jsonl) {
    std::vector<ConceptAnnotation> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < jsonl.size()) {
        std::size_t nl = jsonl.find('\n', pos);
        if (nl == std::string_view::npos) nl = jsonl.size();
        std::string_view line = trim(jsonl.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;

        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw AnnotationError("annotation line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!j.is_object()) {
            throw AnnotationError("annotation line " + std::to_string(line_no) + ": expected an object");
        }
        if (!j.contains("sentence_index") || !j["sentence_index"].is_number_unsigned()) {
            throw AnnotationError("annotation line " + std::to_string(line_no) +
                                  ": 'sentence_index' must be a non-negative integer");
        }
        if (!j.contains("concepts") || !j["concepts"].is_array()) {
            throw AnnotationError("annotation line " + std::to_string(line_no) + ": 'concepts' must be an array");
        }
        ConceptAnnotation ann;
        ann.sentence_index = j["sentence_index"].get<std::size_t>();
        for (const auto& c : j["concepts"]) {
            if (!c.is_object()) {
                throw AnnotationError("annotation line " + std::to_string(line_no) + ": concept must be an object");
            }
            Concept con;
            con.concept_id = required_string(c, "concept_id", line_no);
            con.preferred_name = required_string(c, "preferred_name", line_no);
            con.semantic_type = required_string(c, "semantic_type", line_no);
            if (con.concept_id.empty()) {
                throw AnnotationError("annotation line " + std::to_string(line_no) + ": empty concept_id");
            }
            ann.concepts.push_back(std::move(con));
        }
        out.push_back(std::move(ann));
    }
    return out;
}

std::vector<ConceptAnnotation> load_concept_annotations(const std::filesystem::path& path) {
    std::string bytes;
    try {
        bytes = read_file(path);
    } catch (const std::runtime_error& e) {
        throw AnnotationError(e.what());
    }
    if (!is_valid_utf8(bytes)) {
        throw AnnotationError("annotation file is not valid UTF-8: " + path.string());
    }
    return parse_concept_annotations(bytes);
}

WordSet make_blocked_types(const std::vector<std::string>& names) {
    WordSet out;
    for (const auto& n : names) out.insert(to_lower_ascii(n));
    return out;
}

std::vector<ConceptAnnotation> filter_semantic_types(const std::vector<ConceptAnnotation>& annotations,
                                                     const WordSet& blocked_types) {
    std::vector<ConceptAnnotation> out;
    out.reserve(annotations.size());
    for (const auto& ann : annotations) {
        ConceptAnnotation kept{ann.sentence_index, {}};
        for (const auto& c : ann.concepts) {
            if (!blocked_types.contains(to_lower_ascii(trim(c.semantic_type)))) kept.concepts.push_back(c);
        }
        out.push_back(std::move(kept));
    }
    return out;
}

AnnotationTable::AnnotationTable(const std::vector<ConceptAnnotation>& annotations) {
    for (const auto& ann : annotations) {
        auto& slot = by_sentence_[ann.sentence_index];
        slot.insert(slot.end(), ann.concepts.begin(), ann.concepts.end());
    }
}

void AnnotationTable::check_against(std::size_t sentence_count) const {
    if (!by_sentence_.empty() && by_sentence_.rbegin()->first >= sentence_count) {
        throw AnnotationError("annotation sentence_index " + std::to_string(by_sentence_.rbegin()->first) +
                              " out of range for document with " + std::to_string(sentence_count) + " sentences");
    }
}

const std::vector<Concept>* AnnotationTable::find(std::size_t sentence_index) const {
    auto it = by_sentence_.find(sentence_index);
    return it == by_sentence_.end() ? nullptr : &it->second;
}

ItemSet concept_items(std::size_t sentence_index, const AnnotationTable& filtered) {
    const auto* concepts = filtered.find(sentence_index);
    if (concepts == nullptr) return {};
    std::vector<Item> items;
    items.reserve(concepts->size());
    for (const auto& c : *concepts) items.push_back({c.concept_id, c.preferred_name});
    return normalize(std::move(items));
}

ItemSet term_items(std::string_view sentence_text, const WordSet& stopwords) {
    std::vector<Item> items;
    for (auto& token : alnum_tokens(sentence_text)) {
        if (stopwords.contains(token)) continue;
        std::string stem = porter_stem(token);
        items.push_back({stem, stem});
    }
    return normalize(std::move(items));
}

}  // namespace itemsum
