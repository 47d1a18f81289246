#include "itemsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "itemsum/transactions.hpp"

namespace itemsum {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

SummaryKind parse_summary_kind(std::string_view name) {
    if (name == "itemset") return SummaryKind::itemset;
    if (name == "lead") return SummaryKind::lead;
    if (name == "random") return SummaryKind::random;
    throw std::invalid_argument("unknown summary kind: " + std::string(name));
}

std::string_view to_string(SummaryKind kind) {
    switch (kind) {
        case SummaryKind::itemset: return "itemset";
        case SummaryKind::lead: return "lead";
        case SummaryKind::random: return "random";
    }
    return "itemset";
}

Rational default_min_sup(ItemMode mode) {
    return mode == ItemMode::concept_ids ? Rational(8, 100) : Rational(10, 100);
}

Rational RunConfig::resolved_min_sup() const {
    return min_sup.value_or(default_min_sup(mode));
}

void RunConfig::validate() const {
    MinerConfig{resolved_min_sup(), max_itemset_size}.validate();
    if (compression_rate <= Rational(0, 1) || compression_rate >= Rational(1, 1)) {
        throw std::invalid_argument("compression rate must lie in (0, 1), got " + compression_rate.to_string());
    }
    if (format != "auto") (void)parse_source_format(format);
}

namespace {

template <class T>
ojson optional_json(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) throw std::invalid_argument(std::string("config field '") + key + "' must be a string");
    return j[key].get<std::string>();
}

Rational rational_field(const nlohmann::json& v, const char* key) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>(), 1);
    if (v.is_number_float()) {
        // decimal text round-trips exactly for the short values configs use
        return Rational::parse(v.dump());
    }
    throw std::invalid_argument(std::string("config field '") + key + "' must be a number or string");
}

std::string fmt_fixed(double v, int places = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
    if (s.size() >= width) return s;
    std::string fill(width - s.size(), ' ');
    return right ? fill + s : s + fill;
}

template <class T>
T stage(const char* name, const std::function<T()>& body) {
    try {
        return body();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

}  // namespace

std::string config_to_json(const RunConfig& cfg, SummaryKind kind) {
    return ojson{{"kind", to_string(kind)},
                 {"mode", to_string(cfg.mode)},
                 {"min_sup", cfg.resolved_min_sup().to_string()},
                 {"compression_rate", cfg.compression_rate.to_string()},
                 {"max_itemset_size", optional_json(cfg.max_itemset_size)},
                 {"format", cfg.format},
                 {"annotations", optional_json(cfg.annotations)},
                 {"stopwords", optional_json(cfg.stopwords)},
                 {"blocked_types", optional_json(cfg.blocked_types)},
                 {"abbreviations", optional_json(cfg.abbreviations)},
                 {"seed", optional_json(cfg.seed)}}
        .dump();
}

RunConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.is_object() && j.contains("config") && j["config"].is_object()) j = j["config"];
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    RunConfig cfg;
    if (auto mode = optional_string(j, "mode")) cfg.mode = parse_item_mode(*mode);
    if (j.contains("min_sup") && !j["min_sup"].is_null()) cfg.min_sup = rational_field(j["min_sup"], "min_sup");
    if (j.contains("compression_rate") && !j["compression_rate"].is_null()) {
        cfg.compression_rate = rational_field(j["compression_rate"], "compression_rate");
    }
    if (j.contains("max_itemset_size") && !j["max_itemset_size"].is_null()) {
        cfg.max_itemset_size = j["max_itemset_size"].get<std::size_t>();
    }
    if (auto f = optional_string(j, "format")) cfg.format = *f;
    cfg.annotations = optional_string(j, "annotations");
    cfg.stopwords = optional_string(j, "stopwords");
    cfg.blocked_types = optional_string(j, "blocked_types");
    cfg.abbreviations = optional_string(j, "abbreviations");
    if (j.contains("seed") && !j["seed"].is_null()) cfg.seed = j["seed"].get<std::uint64_t>();
    if (auto out = optional_string(j, "out")) cfg.out = *out;
    cfg.validate();
    return cfg;
}

Resources Resources::load(const RunConfig& cfg) {
    Resources r;
    if (cfg.stopwords) {
        auto list = load_word_list(*cfg.stopwords, true);
        r.stopwords = WordSet(list.begin(), list.end());
    } else {
        r.stopwords = default_stopwords();
    }
    r.blocked_types = cfg.blocked_types ? make_blocked_types(load_word_list(*cfg.blocked_types))
                                        : default_blocked_semantic_types();
    if (cfg.abbreviations) r.abbreviations = AbbreviationList(load_word_list(*cfg.abbreviations, true));
    return r;
}

SourceFormat resolve_format(const std::string& format, const fs::path& path) {
    if (format != "auto") return parse_source_format(format);
    const auto ext = path.extension().string();
    if (ext == ".json") return SourceFormat::structured_json;
    if (ext == ".lines") return SourceFormat::pre_segmented;
    return SourceFormat::plain;
}

std::string document_id_from_path(const fs::path& path) {
    std::string name = path.filename().string();
    auto dot = name.find('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

Document load_document(const fs::path& path, const RunConfig& cfg, const Resources& res) {
    const std::string raw = read_file(path);
    return parse_document(raw, resolve_format(cfg.format, path), document_id_from_path(path), res.abbreviations);
}

std::string SummaryOutputs::summary_filename() const {
    return kind == SummaryKind::itemset ? id + ".summary.txt" : id + "." + std::string(to_string(kind)) + ".summary.txt";
}

std::string SummaryOutputs::result_filename() const {
    return kind == SummaryKind::itemset ? id + ".result.json" : id + "." + std::string(to_string(kind)) + ".result.json";
}

std::string SummaryOutputs::itemsets_filename() const { return id + ".itemsets.json"; }

SummaryOutputs summarize_document(const Document& doc, const std::vector<ConceptAnnotation>* annotations,
                                  const RunConfig& cfg, const Resources& res, SummaryKind kind) {
    SummaryOutputs out;
    out.id = doc.id;
    out.kind = kind;
    out.n = stage<std::size_t>("select", [&] { return compression_to_count(cfg.compression_rate, doc.size()); });

    if (kind == SummaryKind::lead) {
        out.result = stage<SummaryResult>("select", [&] { return lead_baseline(doc, out.n); });
    } else if (kind == SummaryKind::random) {
        if (!cfg.seed) throw PipelineError("select", "the random baseline requires an explicit seed");
        out.result = stage<SummaryResult>("select", [&] { return random_baseline(doc, out.n, *cfg.seed); });
    } else {
        TransactionSet ts = stage<TransactionSet>("annotate", [&] {
            ItemSource source;
            source.mode = cfg.mode;
            if (cfg.mode == ItemMode::concept_ids) {
                if (annotations == nullptr) {
                    throw AnnotationError("concept mode requires a concept annotation file");
                }
                source.annotations = AnnotationTable(filter_semantic_types(*annotations, res.blocked_types));
            } else {
                source.stopwords = res.stopwords;
            }
            return build_transactions(doc, source);
        });
        out.itemsets = stage<std::vector<FrequentItemset>>(
            "mine", [&] { return apriori(ts, MinerConfig{cfg.resolved_min_sup(), cfg.max_itemset_size}); });
        out.result = stage<SummaryResult>("select", [&] { return summarize(doc, ts, out.itemsets, out.n); });
        out.itemsets_json = itemsets_to_json(out.itemsets);
    }

    out.summary_text = out.result.rendered_text + "\n";
    ojson j;
    j["id"] = doc.id;
    j["selected"] = out.result.selected_indices;
    j["N"] = out.n;
    auto& scores = j["scores"] = ojson::array();
    for (const auto& s : out.result.scores) {
        scores.push_back({{"index", s.sentence_index},
                          {"score_num", s.score.num()},
                          {"score_den", s.score.den()},
                          {"covering_itemsets", s.covering_itemsets}});
    }
    j["config"] = ojson::parse(config_to_json(cfg, kind));
    out.result_json = j.dump(2) + "\n";
    return out;
}

SummaryOutputs summarize_file(const fs::path& document_path, const RunConfig& cfg, SummaryKind kind) {
    const Resources res = stage<Resources>("parse", [&] { return Resources::load(cfg); });
    const Document doc = stage<Document>("parse", [&] { return load_document(document_path, cfg, res); });
    std::optional<std::vector<ConceptAnnotation>> annotations;
    if (kind == SummaryKind::itemset && cfg.mode == ItemMode::concept_ids) {
        if (!cfg.annotations) throw PipelineError("annotate", "concept mode requires --annotations");
        fs::path path = *cfg.annotations;
        // a directory holds one <id>.annotations.jsonl per document
        if (fs::is_directory(path)) path /= doc.id + ".annotations.jsonl";
        annotations = stage<std::vector<ConceptAnnotation>>("annotate", [&] { return load_concept_annotations(path); });
    }
    return summarize_document(doc, annotations ? &*annotations : nullptr, cfg, res, kind);
}

std::vector<fs::path> write_outputs(const SummaryOutputs& outputs, const fs::path& dir) {
    fs::create_directories(dir);
    std::vector<std::pair<fs::path, const std::string*>> files{
        {dir / outputs.summary_filename(), &outputs.summary_text},
        {dir / outputs.result_filename(), &outputs.result_json}};
    if (outputs.kind == SummaryKind::itemset) files.emplace_back(dir / outputs.itemsets_filename(), &outputs.itemsets_json);
    std::vector<fs::path> written;
    for (const auto& [path, content] : files) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << *content;
        written.push_back(path);
    }
    return written;
}

// --- evaluation -----------------------------------------------------------

EvaluationReport evaluate_corpus(const std::map<std::string, std::string>& systems,
                                 const std::map<std::string, std::vector<std::string>>& models,
                                 const std::vector<RougeMetric>& metrics, const TokenizerOptions& opts) {
    for (const auto& [id, texts] : models) {
        if (!systems.contains(id)) throw PipelineError("evaluate", "model summary '" + id + "' has no system summary");
    }
    EvaluationReport report;
    report.metrics = metrics;
    for (const auto& [id, text] : systems) {
        auto it = models.find(id);
        if (it == models.end() || it->second.empty()) {
            throw PipelineError("evaluate", "system summary '" + id + "' has no model summary");
        }
        for (const auto& m : it->second) {
            if (rouge_tokens(m, opts).empty()) throw PipelineError("evaluate", "empty model summary for '" + id + "'");
        }
        report.rows.push_back({id, evaluate_summary(text, it->second, metrics, opts)});
    }
    if (report.rows.empty()) throw PipelineError("evaluate", "no documents to evaluate");
    const auto count = static_cast<double>(report.rows.size());
    for (auto m : metrics) {
        RougeScore mean;
        for (const auto& row : report.rows) {
            const auto& s = row.scores.at(m);
            mean.recall += s.recall;
            mean.precision += s.precision;
            mean.f1 += s.f1;
        }
        mean.recall /= count;
        mean.precision /= count;
        mean.f1 /= count;
        report.mean[m] = mean;
    }
    return report;
}

EvaluationReport evaluate_files(const std::vector<fs::path>& system_files, const std::vector<fs::path>& model_files,
                                const std::vector<RougeMetric>& metrics, const TokenizerOptions& opts) {
    std::map<std::string, std::string> systems;
    std::map<std::string, std::vector<std::string>> models;
    for (const auto& p : system_files) {
        auto id = document_id_from_path(p);
        auto text = stage<std::string>("evaluate", [&] { return read_file(p); });
        if (!systems.emplace(id, std::move(text)).second) {
            throw PipelineError("evaluate", "duplicate system summary id '" + id + "'");
        }
    }
    for (const auto& p : model_files) {
        models[document_id_from_path(p)].push_back(stage<std::string>("evaluate", [&] { return read_file(p); }));
    }
    return evaluate_corpus(systems, models, metrics, opts);
}

namespace {

ojson score_json(const RougeScore& s) {
    return {{"recall", s.recall}, {"precision", s.precision}, {"f1", s.f1}};
}

}  // namespace

std::string EvaluationReport::to_json() const {
    ojson j;
    auto& names = j["metrics"] = ojson::array();
    for (auto m : metrics) names.push_back(to_string(m));
    auto& docs = j["documents"] = ojson::array();
    for (const auto& row : rows) {
        ojson r;
        r["doc_id"] = row.doc_id;
        for (auto m : metrics) r[std::string(to_string(m))] = score_json(row.scores.at(m));
        docs.push_back(std::move(r));
    }
    ojson r;
    r["doc_id"] = "mean";
    for (auto m : metrics) r[std::string(to_string(m))] = score_json(mean.at(m));
    j["mean"] = std::move(r);
    return j.dump(2) + "\n";
}

std::string EvaluationReport::to_text() const {
    std::size_t id_width = 6;
    for (const auto& row : rows) id_width = std::max(id_width, row.doc_id.size());
    std::ostringstream os;
    os << pad("doc_id", id_width, false);
    for (auto m : metrics) os << "  " << pad(std::string(to_string(m)), 8, true);
    os << '\n';
    auto line = [&](const std::string& id, const std::map<RougeMetric, RougeScore>& scores) {
        os << pad(id, id_width, false);
        for (auto m : metrics) os << "  " << pad(fmt_fixed(scores.at(m).recall), 8, true);
        os << '\n';
    };
    for (const auto& row : rows) line(row.doc_id, row.scores);
    line("mean", mean);
    return os.str();
}

// --- sweep ----------------------------------------------------------------

std::vector<CorpusEntry> load_corpus(const fs::path& manifest, const RunConfig& cfg) {
    const Resources res = stage<Resources>("parse", [&] { return Resources::load(cfg); });
    nlohmann::json j = stage<nlohmann::json>("parse", [&] { return nlohmann::json::parse(read_file(manifest)); });
    if (!j.contains("documents") || !j["documents"].is_array()) {
        throw PipelineError("parse", "corpus manifest needs a 'documents' array");
    }
    const fs::path base = manifest.parent_path();
    std::vector<CorpusEntry> corpus;
    for (const auto& e : j["documents"]) {
        if (!e.contains("document") || !e["document"].is_string()) {
            throw PipelineError("parse", "corpus entry lacks a 'document' path");
        }
        const fs::path doc_path = base / e["document"].get<std::string>();
        const std::string id = e.contains("id") ? e["id"].get<std::string>() : document_id_from_path(doc_path);
        RunConfig local = cfg;
        if (e.contains("format")) local.format = e["format"].get<std::string>();
        CorpusEntry entry;
        entry.id = id;
        entry.document = stage<Document>("parse", [&] {
            try {
                return load_document(doc_path, local, res);
            } catch (const std::exception& ex) {
                throw std::runtime_error(id + ": " + ex.what());
            }
        });
        entry.document.id = id;
        if (e.contains("annotations") && e["annotations"].is_string()) {
            entry.annotations = stage<std::vector<ConceptAnnotation>>("annotate", [&] {
                try {
                    return load_concept_annotations(base / e["annotations"].get<std::string>());
                } catch (const std::exception& ex) {
                    throw std::runtime_error(id + ": " + ex.what());
                }
            });
        }
        std::vector<std::string> model_paths;
        if (e.contains("model")) model_paths.push_back(e["model"].get<std::string>());
        if (e.contains("models")) {
            for (const auto& m : e["models"]) model_paths.push_back(m.get<std::string>());
        }
        if (model_paths.empty()) throw PipelineError("parse", id + ": corpus entry lacks a model summary");
        for (const auto& m : model_paths) {
            entry.models.push_back(stage<std::string>("parse", [&] { return read_file(base / m); }));
        }
        corpus.push_back(std::move(entry));
    }
    return corpus;
}

SweepSpec SweepSpec::parse_range(std::string_view text) {
    SweepSpec spec;
    if (text.find(':') != std::string_view::npos) {
        std::vector<Rational> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t colon = text.find(':', pos);
            if (colon == std::string_view::npos) colon = text.size();
            parts.push_back(Rational::parse(text.substr(pos, colon - pos)));
            pos = colon + 1;
        }
        if (parts.size() != 3) throw std::invalid_argument("sweep range must be start:stop:step");
        if (parts[2] <= Rational(0, 1)) throw std::invalid_argument("sweep step must be positive");
        for (Rational v = parts[0]; v <= parts[1]; v += parts[2]) spec.min_sups.push_back(v);
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            auto part = trim(text.substr(pos, comma - pos));
            if (!part.empty()) spec.min_sups.push_back(Rational::parse(part));
            pos = comma + 1;
        }
    }
    spec.validate();
    return spec;
}

void SweepSpec::validate() const {
    if (min_sups.empty()) throw std::invalid_argument("sweep needs at least one min_sup value");
    for (std::size_t i = 0; i < min_sups.size(); ++i) {
        if (min_sups[i] <= Rational(0, 1) || min_sups[i] >= Rational(1, 1)) {
            throw std::invalid_argument("sweep value " + min_sups[i].to_string() + " outside (0, 1)");
        }
        if (i > 0 && min_sups[i] <= min_sups[i - 1]) {
            throw std::invalid_argument("sweep values must be strictly increasing");
        }
    }
    if (metrics.empty()) throw std::invalid_argument("sweep needs at least one metric");
}

namespace {

struct DocSweep {
    std::vector<std::map<RougeMetric, double>> recall;           // per threshold
    std::vector<std::vector<std::size_t>> counts_by_size;        // per threshold
    std::exception_ptr error;
};

DocSweep sweep_document(const CorpusEntry& entry, const SweepSpec& spec, const RunConfig& cfg, const Resources& res,
                        const TokenizerOptions& opts) {
    DocSweep out;
    const Document& doc = entry.document;
    TransactionSet ts = stage<TransactionSet>("annotate", [&] {
        ItemSource source;
        source.mode = cfg.mode;
        if (cfg.mode == ItemMode::concept_ids) {
            if (!entry.annotations) throw AnnotationError("concept mode requires annotations");
            source.annotations = AnnotationTable(filter_semantic_types(*entry.annotations, res.blocked_types));
        } else {
            source.stopwords = res.stopwords;
        }
        return build_transactions(doc, source);
    });
    const std::size_t n = compression_to_count(cfg.compression_rate, doc.size());
    for (const auto& min_sup : spec.min_sups) {
        auto itemsets = stage<std::vector<FrequentItemset>>(
            "mine", [&] { return apriori(ts, MinerConfig{min_sup, cfg.max_itemset_size}); });
        auto result = stage<SummaryResult>("select", [&] { return summarize(doc, ts, itemsets, n); });
        auto scores = stage<std::map<RougeMetric, RougeScore>>(
            "evaluate", [&] { return evaluate_summary(result.rendered_text, entry.models, spec.metrics, opts); });
        std::map<RougeMetric, double> recall;
        for (const auto& [m, s] : scores) recall[m] = s.recall;
        out.recall.push_back(std::move(recall));
        out.counts_by_size.push_back(count_by_size(itemsets));
    }
    return out;
}

}  // namespace

SweepTable run_sweep(const std::vector<CorpusEntry>& corpus, const SweepSpec& spec, const RunConfig& cfg,
                     const TokenizerOptions& opts) {
    spec.validate();
    if (corpus.empty()) throw PipelineError("parse", "empty corpus");
    const Resources res = stage<Resources>("parse", [&] { return Resources::load(cfg); });

    std::vector<DocSweep> per_doc(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            try {
                per_doc[i] = sweep_document(corpus[i], spec, cfg, res, opts);
            } catch (...) {
                per_doc[i].error = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, corpus.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!per_doc[i].error) continue;
        try {
            std::rethrow_exception(per_doc[i].error);
        } catch (const PipelineError& e) {
            throw PipelineError(e.stage(), "document '" + corpus[i].id + "': " + e.what());
        } catch (const std::exception& e) {
            throw PipelineError("sweep", "document '" + corpus[i].id + "': " + e.what());
        }
    }

    SweepTable table;
    table.metrics = spec.metrics;
    const auto docs = static_cast<double>(corpus.size());
    for (std::size_t t = 0; t < spec.min_sups.size(); ++t) {
        SweepRow row;
        row.min_sup = spec.min_sups[t];
        row.mean_by_size.assign(4, 0.0);
        for (auto m : spec.metrics) row.mean_recall[m] = 0.0;
        for (const auto& d : per_doc) {
            for (auto m : spec.metrics) row.mean_recall[m] += d.recall[t].at(m);
            const auto& counts = d.counts_by_size[t];
            for (std::size_t k = 1; k < counts.size(); ++k) {
                row.mean_itemsets += static_cast<double>(counts[k]);
                if (k <= 4) row.mean_by_size[k - 1] += static_cast<double>(counts[k]);
            }
        }
        for (auto& [m, v] : row.mean_recall) v /= docs;
        row.mean_itemsets /= docs;
        for (auto& v : row.mean_by_size) v /= docs;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string SweepTable::to_csv() const {
    std::ostringstream os;
    os << "min_sup";
    for (auto m : metrics) os << ',' << to_string(m);
    os << ",itemsets,k1,k2,k3,k4\n";
    for (const auto& row : rows) {
        os << row.min_sup.to_string();
        for (auto m : metrics) os << ',' << fmt_fixed(row.mean_recall.at(m), 6);
        os << ',' << fmt_fixed(row.mean_itemsets, 2);
        for (double v : row.mean_by_size) os << ',' << fmt_fixed(v, 2);
        os << '\n';
    }
    return os.str();
}

std::string SweepTable::to_text() const {
    std::ostringstream os;
    os << pad("min_sup", 8, false);
    for (auto m : metrics) os << "  " << pad(std::string(to_string(m)), 8, true);
    for (const char* h : {"itemsets", "k=1", "k=2", "k=3", "k=4"}) os << "  " << pad(h, 9, true);
    os << '\n';
    for (const auto& row : rows) {
        os << pad(row.min_sup.to_string(), 8, false);
        for (auto m : metrics) os << "  " << pad(fmt_fixed(row.mean_recall.at(m)), 8, true);
        os << "  " << pad(fmt_fixed(row.mean_itemsets, 2), 9, true);
        for (double v : row.mean_by_size) os << "  " << pad(fmt_fixed(v, 2), 9, true);
        os << '\n';
    }
    return os.str();
}

}  // namespace itemsum
