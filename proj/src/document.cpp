#include "itemsum/document.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "itemsum/text.hpp"

namespace itemsum {

using nlohmann::json;

SourceFormat parse_source_format(std::string_view name) {
    if (name == "plain" || name == "text") return SourceFormat::plain;
    if (name == "json" || name == "structured-json") return SourceFormat::structured_json;
    if (name == "lines" || name == "pre-segmented") return SourceFormat::pre_segmented;
    throw std::invalid_argument("unknown document format: " + std::string(name));
}

std::string_view to_string(SourceFormat f) {
    switch (f) {
        case SourceFormat::plain: return "plain";
        case SourceFormat::structured_json: return "json";
        case SourceFormat::pre_segmented: return "lines";
    }
    return "plain";
}

namespace {

BlockKind parse_block_kind(const std::string& s) {
    if (s == "prose") return BlockKind::prose;
    if (s == "figure") return BlockKind::figure;
    if (s == "table") return BlockKind::table;
    throw DocumentError("malformed structured input: unknown block kind '" + s + "'");
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_closing(std::string_view text, std::size_t pos, std::size_t& width) {
    char c = text[pos];
    if (c == ')' || c == ']' || c == '"' || c == '\'') {
        width = 1;
        return true;
    }
    // U+2019 and U+201D
    if (text.substr(pos, 3) == "\xE2\x80\x99" || text.substr(pos, 3) == "\xE2\x80\x9D") {
        width = 3;
        return true;
    }
    return false;
}

bool is_opening(std::string_view text, std::size_t pos, std::size_t& width) {
    char c = text[pos];
    if (c == '(' || c == '[' || c == '"' || c == '\'') {
        width = 1;
        return true;
    }
    // U+2018 and U+201C
    if (text.substr(pos, 3) == "\xE2\x80\x98" || text.substr(pos, 3) == "\xE2\x80\x9C") {
        width = 3;
        return true;
    }
    return false;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

void push_sentence(std::vector<Sentence>& out, std::string_view text, std::size_t begin, std::size_t end,
                   std::size_t base_offset) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) return;
    Sentence s;
    s.index = out.size();
    s.text = std::string(text.substr(begin, end - begin));
    s.span = {base_offset + begin, base_offset + end};
    s.word_count = count_words(s.text);
    out.push_back(std::move(s));
}

Document finish(Document doc) {
    if (doc.sentences.empty()) {
        throw DocumentError("empty document: no sentences in '" + doc.id + "'");
    }
    return doc;
}

}  // namespace

StructuredInput parse_structured(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("malformed structured input: ") + e.what());
    }
    if (!j.is_object()) {
        throw DocumentError("malformed structured input: top level must be an object");
    }
    StructuredInput input;
    if (!j.contains("id") || !j["id"].is_string()) {
        throw DocumentError("malformed structured input: missing string field 'id'");
    }
    input.id = j["id"].get<std::string>();
    if (j.contains("title") && !j["title"].is_null()) {
        if (!j["title"].is_string()) throw DocumentError("malformed structured input: 'title' must be a string");
        input.title = j["title"].get<std::string>();
    }
    if (!j.contains("blocks") || !j["blocks"].is_array()) {
        throw DocumentError("malformed structured input: missing array field 'blocks'");
    }
    std::size_t n = 0;
    for (const auto& b : j["blocks"]) {
        const std::string where = "block " + std::to_string(n++);
        if (!b.is_object() || !b.contains("kind") || !b["kind"].is_string()) {
            throw DocumentError("malformed structured input: " + where + " lacks string field 'kind'");
        }
        if (!b.contains("text") || !b["text"].is_string()) {
            throw DocumentError("malformed structured input: " + where + " lacks string field 'text'");
        }
        Block block;
        block.kind = parse_block_kind(b["kind"].get<std::string>());
        block.text = b["text"].get<std::string>();
        if (b.contains("name") && !b["name"].is_null()) {
            if (!b["name"].is_string()) throw DocumentError("malformed structured input: " + where + " 'name' must be a string");
            block.name = b["name"].get<std::string>();
        }
        input.blocks.push_back(std::move(block));
    }
    return input;
}

StripResult strip_nonprose(const StructuredInput& input) {
    StripResult result;
    result.document.id = input.id;
    result.document.title = input.title;
    for (const auto& b : input.blocks) {
        if (b.kind == BlockKind::prose) {
            result.document.blocks.push_back(b);
        } else {
            result.removed.push_back(b);
        }
    }
    return result;
}

AbbreviationList::AbbreviationList() : entries_(default_abbreviations()) {}

AbbreviationList::AbbreviationList(std::vector<std::string> entries) : entries_(std::move(entries)) {
    for (auto& e : entries_) e = to_lower_ascii(e);
}

bool AbbreviationList::ends_with_abbreviation(std::string_view text, std::size_t period_pos) const {
    const std::size_t end = period_pos + 1;
    for (const auto& e : entries_) {
        if (e.empty() || e.size() > end) continue;
        const std::size_t start = end - e.size();
        // compare case-insensitively
        bool match = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (std::tolower(static_cast<unsigned char>(text[start + k])) != static_cast<unsigned char>(e[k])) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        std::size_t w = 0;
        if (start == 0 || is_space(text[start - 1]) || is_opening(text, start - 1, w)) return true;
    }
    return false;
}

std::vector<Sentence> segment_sentences(std::string_view text, const AbbreviationList& abbrevs,
                                        std::size_t base_offset) {
    std::vector<Sentence> out;
    const std::size_t n = text.size();
    std::size_t sentence_begin = 0;
    std::size_t i = 0;
    while (i < n) {
        if (!is_terminal(text[i])) {
            ++i;
            continue;
        }
        const std::size_t punct = i;
        std::size_t j = i + 1;
        while (j < n && is_terminal(text[j])) ++j;
        const bool single_period = text[punct] == '.' && j == punct + 1;
        std::size_t w = 0;
        while (j < n && is_closing(text, j, w)) j += w;
        const std::size_t sentence_end = j;
        if (j >= n || !is_space(text[j])) {
            i = j;
            continue;
        }
        std::size_t k = j;
        while (k < n && is_space(text[k])) ++k;
        while (k < n && is_opening(text, k, w)) k += w;
        const bool next_starts_sentence =
            k < n && (std::isupper(static_cast<unsigned char>(text[k])) || std::isdigit(static_cast<unsigned char>(text[k])));
        const bool abbreviation = single_period && abbrevs.ends_with_abbreviation(text, punct);
        if (next_starts_sentence && !abbreviation) {
            push_sentence(out, text, sentence_begin, sentence_end, base_offset);
            sentence_begin = sentence_end;
        }
        i = j;
    }
    push_sentence(out, text, sentence_begin, n, base_offset);
    return out;
}

Document document_from_structured(const StructuredInput& input, const AbbreviationList& abbrevs) {
    Document doc;
    doc.id = input.id;
    doc.title = input.title;
    doc.source_format = SourceFormat::structured_json;
    for (const auto& b : input.blocks) {
        if (b.kind != BlockKind::prose) continue;
        if (!doc.source_text.empty()) doc.source_text += "\n\n";
        const std::size_t base = doc.source_text.size();
        doc.source_text += b.text;
        // block boundaries always end a sentence
        for (auto& s : segment_sentences(b.text, abbrevs, base)) {
            s.index = doc.sentences.size();
            doc.sentences.push_back(std::move(s));
        }
    }
    return finish(std::move(doc));
}

Document parse_document(std::string_view raw, SourceFormat format, std::string id, const AbbreviationList& abbrevs) {
    if (!is_valid_utf8(raw)) {
        throw DocumentError("input is not valid UTF-8");
    }
    if (format == SourceFormat::structured_json) {
        if (trim(raw).empty()) {
            throw DocumentError("empty document: no input bytes");
        }
        return document_from_structured(strip_nonprose(parse_structured(raw)).document, abbrevs);
    }
    Document doc;
    doc.id = std::move(id);
    doc.source_format = format;
    doc.source_text = std::string(raw);
    if (format == SourceFormat::plain) {
        doc.sentences = segment_sentences(raw, abbrevs);
    } else {
        std::size_t pos = 0;
        while (pos < raw.size()) {
            std::size_t nl = raw.find('\n', pos);
            if (nl == std::string_view::npos) nl = raw.size();
            push_sentence(doc.sentences, raw, pos, nl, 0);
            pos = nl + 1;
        }
    }
    return finish(std::move(doc));
}

}  // namespace itemsum
