#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itemsum/annotation.hpp"
#include "itemsum/document.hpp"
#include "itemsum/miner.hpp"
#include "itemsum/rational.hpp"
#include "itemsum/rouge.hpp"
#include "itemsum/summarizer.hpp"

namespace itemsum {

/// Failure tagged with the pipeline stage that raised it.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

enum class SummaryKind { itemset, lead, random };
SummaryKind parse_summary_kind(std::string_view name);
std::string_view to_string(SummaryKind kind);

/// Everything that determines a run's output. Serialized verbatim into
/// every artifact, and loadable back from those artifacts.
struct RunConfig {
    ItemMode mode = ItemMode::concept_ids;
    std::optional<Rational> min_sup;  // unset: 0.08 for concepts, 0.1 for terms
    Rational compression_rate{3, 10};
    std::optional<std::size_t> max_itemset_size;
    std::string format = "auto";  // auto | plain | json | lines
    std::optional<std::string> annotations;
    std::optional<std::string> stopwords;
    std::optional<std::string> blocked_types;
    std::optional<std::string> abbreviations;
    std::optional<std::uint64_t> seed;
    std::string out = ".";

    Rational resolved_min_sup() const;
    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

Rational default_min_sup(ItemMode mode);

/// The resolved config as JSON (min_sup always present).
std::string config_to_json(const RunConfig& cfg, SummaryKind kind = SummaryKind::itemset);
/// Accepts a bare config object or any artifact carrying a "config" member.
RunConfig config_from_json(const std::string& text);

/// Word lists resolved from a config: files when given, bundled data otherwise.
struct Resources {
    WordSet stopwords;
    WordSet blocked_types;
    AbbreviationList abbreviations;

    static Resources load(const RunConfig& cfg);
};

SourceFormat resolve_format(const std::string& format, const std::filesystem::path& path);

/// Stem of a file name up to its first dot: "doc1.summary.txt" -> "doc1".
std::string document_id_from_path(const std::filesystem::path& path);

Document load_document(const std::filesystem::path& path, const RunConfig& cfg, const Resources& res);

/// File contents for one summarized document.
struct SummaryOutputs {
    std::string id;
    SummaryKind kind = SummaryKind::itemset;
    std::size_t n = 0;
    SummaryResult result;
    std::vector<FrequentItemset> itemsets;
    std::string summary_text;   // rendered sentences plus trailing newline
    std::string result_json;
    std::string itemsets_json;  // itemset runs only

    std::string summary_filename() const;
    std::string result_filename() const;
    std::string itemsets_filename() const;
};

/// Runs the itemset pipeline (or a baseline) on an in-memory document.
/// Annotations are required in concept mode and ignored in term mode.
SummaryOutputs summarize_document(const Document& doc, const std::vector<ConceptAnnotation>* annotations,
                                  const RunConfig& cfg, const Resources& res,
                                  SummaryKind kind = SummaryKind::itemset);

/// Load, run, and return outputs for a document file. Stages: parse,
/// annotate, mine, select.
SummaryOutputs summarize_file(const std::filesystem::path& document_path, const RunConfig& cfg,
                              SummaryKind kind = SummaryKind::itemset);

/// Writes the output files into cfg.out, returning their paths.
std::vector<std::filesystem::path> write_outputs(const SummaryOutputs& outputs, const std::filesystem::path& dir);

// --- evaluation -----------------------------------------------------------

struct EvaluationRow {
    std::string doc_id;
    std::map<RougeMetric, RougeScore> scores;
};

struct EvaluationReport {
    std::vector<RougeMetric> metrics;
    std::vector<EvaluationRow> rows;  // sorted by doc_id
    std::map<RougeMetric, RougeScore> mean;

    std::string to_json() const;
    std::string to_text() const;  // aligned columns, recall
};

/// Pairs system and model texts by id. Several models may share one id.
/// Throws PipelineError("evaluate", ...) for unpaired ids or empty models.
EvaluationReport evaluate_corpus(const std::map<std::string, std::string>& systems,
                                 const std::map<std::string, std::vector<std::string>>& models,
                                 const std::vector<RougeMetric>& metrics = all_rouge_metrics(),
                                 const TokenizerOptions& opts = {});

EvaluationReport evaluate_files(const std::vector<std::filesystem::path>& system_files,
                                const std::vector<std::filesystem::path>& model_files,
                                const std::vector<RougeMetric>& metrics = all_rouge_metrics(),
                                const TokenizerOptions& opts = {});

// --- min_sup sweep --------------------------------------------------------

struct CorpusEntry {
    std::string id;
    Document document;
    std::optional<std::vector<ConceptAnnotation>> annotations;
    std::vector<std::string> models;
};

/// JSON manifest: {"documents": [{"id", "document", "format"?, "annotations"?, "model" | "models"}]}.
/// Paths are relative to the manifest's directory.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& manifest, const RunConfig& cfg);

struct SweepSpec {
    std::vector<Rational> min_sups;
    std::vector<RougeMetric> metrics{RougeMetric::r2, RougeMetric::rsu4};

    /// "0.02:0.20:0.01" (inclusive) or "0.05,0.08,0.1".
    static SweepSpec parse_range(std::string_view text);
    /// Throws std::invalid_argument unless values are strictly increasing in (0, 1).
    void validate() const;
};

struct SweepRow {
    Rational min_sup;
    std::map<RougeMetric, double> mean_recall;
    double mean_itemsets = 0.0;
    std::vector<double> mean_by_size;  // k = 1..4
};

struct SweepTable {
    std::vector<RougeMetric> metrics;
    std::vector<SweepRow> rows;

    std::string to_csv() const;
    std::string to_text() const;
};

/// One row per threshold. Documents run in parallel; rows and means do not
/// depend on completion order.
SweepTable run_sweep(const std::vector<CorpusEntry>& corpus, const SweepSpec& spec, const RunConfig& cfg,
                     const TokenizerOptions& opts = {});

}  // namespace itemsum
