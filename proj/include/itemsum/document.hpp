#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itemsum {

/// Raised for undecodable, malformed or empty input documents.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SourceFormat { plain, structured_json, pre_segmented };

SourceFormat parse_source_format(std::string_view name);  // "plain" | "json" | "lines"
std::string_view to_string(SourceFormat f);

struct CharSpan {
    std::size_t start = 0;
    std::size_t end = 0;  // exclusive
    friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Sentence {
    std::size_t index = 0;
    std::string text;
    CharSpan span;  // offsets into Document::source_text
    std::size_t word_count = 0;
};

/// The unit of summarization. Sentences are indexed 0..S-1 in appearance
/// order; duplicate texts remain distinct sentences.
struct Document {
    std::string id;
    std::optional<std::string> title;
    std::vector<Sentence> sentences;
    SourceFormat source_format = SourceFormat::plain;
    /// Text that sentence spans point into. For structured input this is
    /// the prose blocks joined with blank lines.
    std::string source_text;

    std::size_t size() const { return sentences.size(); }
};

enum class BlockKind { prose, figure, table };

struct Block {
    BlockKind kind = BlockKind::prose;
    std::optional<std::string> name;
    std::string text;
    friend bool operator==(const Block&, const Block&) = default;
};

/// Structured JSON input: {"id", "title"?, "blocks": [{"kind", "name"?, "text"}]}.
struct StructuredInput {
    std::string id;
    std::optional<std::string> title;
    std::vector<Block> blocks;
    friend bool operator==(const StructuredInput&, const StructuredInput&) = default;
};

StructuredInput parse_structured(std::string_view json_text);

struct StripResult {
    StructuredInput document;
    std::vector<Block> removed;
};

/// Drops every figure and table block. Idempotent.
StripResult strip_nonprose(const StructuredInput& input);

/// Abbreviations that never end a sentence (lowercase, trailing period).
class AbbreviationList {
public:
    AbbreviationList();  // bundled list
    explicit AbbreviationList(std::vector<std::string> entries);

    /// True when text[0..period_pos] ends with a listed abbreviation that
    /// starts at a word boundary.
    bool ends_with_abbreviation(std::string_view text, std::size_t period_pos) const;

private:
    std::vector<std::string> entries_;
};

/// Rule-based splitter: '.', '!' or '?' (plus any closing quotes or
/// brackets) followed by whitespace and then an uppercase ASCII letter or
/// digit, optionally behind an opening quote or bracket. A period that
/// closes a listed abbreviation is not a boundary.
///
/// Offsets in the returned spans are relative to `text` plus `base_offset`.
std::vector<Sentence> segment_sentences(std::string_view text, const AbbreviationList& abbrevs = {},
                                        std::size_t base_offset = 0);

/// Full parse. `id` names plain and pre-segmented inputs; structured JSON
/// carries its own id. Throws DocumentError.
Document parse_document(std::string_view raw, SourceFormat format, std::string id = "document",
                        const AbbreviationList& abbrevs = {});

/// Builds a document from already-stripped structured input.
Document document_from_structured(const StructuredInput& input, const AbbreviationList& abbrevs = {});

}  // namespace itemsum
