#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace itemsum {

using WordSet = std::unordered_set<std::string>;

bool is_valid_utf8(std::string_view bytes);

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

/// Lowercased maximal runs of ASCII alphanumerics. Non-ASCII bytes act as
/// separators, so accented words split; acceptable for English corpora.
std::vector<std::string> alnum_tokens(std::string_view text);

/// Number of whitespace-delimited tokens.
std::size_t count_words(std::string_view text);

/// One entry per line, trimmed; blank lines and lines starting with '#'
/// are skipped. Entries keep their case unless `lowercase` is set.
std::vector<std::string> parse_word_list(std::string_view text, bool lowercase = false);
std::vector<std::string> load_word_list(const std::filesystem::path& path, bool lowercase = false);

/// Reads a whole file as bytes. Throws std::runtime_error when unreadable.
std::string read_file(const std::filesystem::path& path);

// Data files bundled into the library at build time.
std::string_view bundled_stopwords_text();
std::string_view bundled_blocked_types_text();
std::string_view bundled_abbreviations_text();

const WordSet& default_stopwords();
const WordSet& default_blocked_semantic_types();  // lowercased
const std::vector<std::string>& default_abbreviations();  // lowercased

}  // namespace itemsum
