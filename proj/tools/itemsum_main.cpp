// itemsum: itemset-based extractive summarization and ROUGE evaluation.
//
//   itemsum summarize doc.json --annotations doc.annotations.jsonl --out out/
//   itemsum summarize doc.txt --mode term --out out/
//   itemsum baseline doc.txt --kind random --seed 7 --out out/
//   itemsum evaluate --system out/*.summary.txt --model abstracts/*.txt
//   itemsum sweep --corpus corpus.json --sweep-range 0.02:0.20:0.01 --out sweep/

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "itemsum/harness.hpp"
#include "itemsum/text.hpp"

namespace fs = std::filesystem;
using namespace itemsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that runs the pipeline. Unset values fall
// back to the config file, then to built-in defaults.
struct PipelineFlags {
    std::optional<std::string> config;
    std::optional<std::string> mode;
    std::optional<std::string> min_sup;
    std::optional<std::string> rate;
    std::optional<std::string> annotations;
    std::optional<std::string> stopwords;
    std::optional<std::string> blocked_types;
    std::optional<std::string> abbreviations;
    std::optional<std::string> format;
    std::optional<std::size_t> max_size;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;

    void add_to(CLI::App& app) {
        app.add_option("--config", config, "JSON config file (or any result.json); flags override it");
        app.add_option("--mode", mode, "Item mode: concept or term")->check(CLI::IsMember({"concept", "term"}));
        app.add_option("--min-sup", min_sup, "Minimum support, e.g. 0.08 or 7/85 (default 0.08 concept, 0.1 term)");
        app.add_option("--rate", rate, "Compression rate in (0,1) (default 0.3)");
        app.add_option("--annotations", annotations, "Concept annotation JSON-lines file, or a directory of <id>.annotations.jsonl");
        app.add_option("--stopwords", stopwords, "Stop-word list (default: bundled English list)");
        app.add_option("--blocked-types", blocked_types, "Blocked semantic types (default: bundled list of nine)");
        app.add_option("--abbreviations", abbreviations, "Abbreviation list for sentence splitting");
        app.add_option("--format", format, "Document format: auto, plain, json, lines")
            ->check(CLI::IsMember({"auto", "plain", "json", "lines"}));
        app.add_option("--max-size", max_size, "Largest itemset size to mine");
        app.add_option("--seed", seed, "Seed for the random baseline");
        app.add_option("--out", out, "Output directory");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        try {
            if (config) cfg = config_from_json(read_file(*config));
            if (mode) {
                cfg.mode = parse_item_mode(*mode);
                // a mode switch without an explicit threshold picks that mode's default
                if (!min_sup) cfg.min_sup.reset();
            }
            if (min_sup) cfg.min_sup = Rational::parse(*min_sup);
            if (rate) cfg.compression_rate = Rational::parse(*rate);
            if (annotations) cfg.annotations = *annotations;
            if (stopwords) cfg.stopwords = *stopwords;
            if (blocked_types) cfg.blocked_types = *blocked_types;
            if (abbreviations) cfg.abbreviations = *abbreviations;
            if (format) cfg.format = *format;
            if (max_size) cfg.max_itemset_size = *max_size;
            if (seed) cfg.seed = *seed;
            if (out) cfg.out = *out;
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        } catch (const std::exception& e) {
            throw UsageError(std::string("config: ") + e.what());
        }
        return cfg;
    }
};

void print_written(const SummaryOutputs& o, const std::vector<fs::path>& files) {
    std::cout << o.id << ": " << o.result.selected_indices.size() << " sentences (N=" << o.n << ")";
    if (o.kind == SummaryKind::itemset) std::cout << ", " << o.itemsets.size() << " frequent itemsets";
    std::cout << '\n';
    for (const auto& f : files) std::cout << "  wrote " << f.string() << '\n';
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

std::vector<RougeMetric> metrics_or_usage(const std::string& list) {
    try {
        return parse_rouge_metrics(list);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Itemset-based extractive summarization"};
    app.require_subcommand(1);

    PipelineFlags summarize_flags;
    std::vector<std::string> summarize_docs;
    bool dump_transactions = false;
    auto* summarize = app.add_subcommand("summarize", "Summarize documents with frequent-itemset scoring");
    summarize->add_option("documents", summarize_docs, "Document files")->required();
    summarize->add_flag("--dump-transactions", dump_transactions, "Also write <id>.transactions.json");
    summarize_flags.add_to(*summarize);

    PipelineFlags baseline_flags;
    std::vector<std::string> baseline_docs;
    std::string baseline_kind = "lead";
    auto* baseline = app.add_subcommand("baseline", "Lead or random baseline summaries");
    baseline->add_option("documents", baseline_docs, "Document files")->required();
    baseline->add_option("--kind", baseline_kind, "lead or random")->check(CLI::IsMember({"lead", "random"}));
    baseline_flags.add_to(*baseline);

    std::vector<std::string> eval_systems;
    std::vector<std::string> eval_models;
    std::string eval_metrics = "all";
    std::optional<std::string> eval_out;
    bool eval_stem = false;
    auto* evaluate = app.add_subcommand("evaluate", "ROUGE scores of system summaries against model summaries");
    evaluate->add_option("--system", eval_systems, "System summary files")->required();
    evaluate->add_option("--model", eval_models, "Model summary files, paired by id")->required();
    evaluate->add_option("--metrics", eval_metrics, "Comma list of R1,R2,RW12,RSU4 or 'all'");
    evaluate->add_flag("--stem", eval_stem, "Porter-stem tokens before matching");
    evaluate->add_option("--out", eval_out, "Directory for rouge_report.json and rouge_report.txt");

    PipelineFlags sweep_flags;
    std::string sweep_corpus;
    std::string sweep_range = "0.02:0.20:0.01";
    std::string sweep_metrics = "R2,RSU4";
    auto* sweep = app.add_subcommand("sweep", "Tabulate ROUGE and itemset counts across min_sup values");
    sweep->add_option("--corpus", sweep_corpus, "Corpus manifest JSON")->required();
    sweep->add_option("--sweep-range", sweep_range, "start:stop:step (inclusive) or a comma list");
    sweep->add_option("--metrics", sweep_metrics, "Metrics to report");
    sweep_flags.add_to(*sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*summarize) {
            const RunConfig cfg = summarize_flags.resolve();
            for (const auto& doc : summarize_docs) {
                auto outputs = summarize_file(doc, cfg, SummaryKind::itemset);
                auto files = write_outputs(outputs, cfg.out);
                if (dump_transactions) {
                    // rebuild for the dump; the pipeline does not keep its transactions
                    const Resources res = Resources::load(cfg);
                    const Document d = load_document(doc, cfg, res);
                    ItemSource source;
                    source.mode = cfg.mode;
                    source.stopwords = res.stopwords;
                    if (cfg.mode == ItemMode::concept_ids) {
                        fs::path ann = *cfg.annotations;
                        if (fs::is_directory(ann)) ann /= d.id + ".annotations.jsonl";
                        source.annotations = AnnotationTable(filter_semantic_types(load_concept_annotations(ann), res.blocked_types));
                    }
                    const fs::path p = fs::path(cfg.out) / (d.id + ".transactions.json");
                    write_text(p, transactions_to_json(build_transactions(d, source)));
                    files.push_back(p);
                }
                print_written(outputs, files);
            }
        } else if (*baseline) {
            const RunConfig cfg = baseline_flags.resolve();
            const SummaryKind kind = parse_summary_kind(baseline_kind);
            if (kind == SummaryKind::random && !cfg.seed) {
                throw UsageError("the random baseline requires --seed (or a seed in --config)");
            }
            for (const auto& doc : baseline_docs) {
                auto outputs = summarize_file(doc, cfg, kind);
                print_written(outputs, write_outputs(outputs, cfg.out));
            }
        } else if (*evaluate) {
            const auto metrics = metrics_or_usage(eval_metrics);
            std::vector<fs::path> systems(eval_systems.begin(), eval_systems.end());
            std::vector<fs::path> models(eval_models.begin(), eval_models.end());
            const auto report = evaluate_files(systems, models, metrics, TokenizerOptions{eval_stem});
            std::cout << report.to_text();
            if (eval_out) {
                fs::create_directories(*eval_out);
                write_text(fs::path(*eval_out) / "rouge_report.json", report.to_json());
                write_text(fs::path(*eval_out) / "rouge_report.txt", report.to_text());
            }
        } else if (*sweep) {
            const RunConfig cfg = sweep_flags.resolve();
            SweepSpec spec;
            try {
                spec = SweepSpec::parse_range(sweep_range);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--sweep-range: ") + e.what());
            }
            spec.metrics = metrics_or_usage(sweep_metrics);
            const auto corpus = load_corpus(sweep_corpus, cfg);
            const auto table = run_sweep(corpus, spec, cfg);
            std::cout << "# " << config_to_json(cfg) << '\n' << table.to_text();
            fs::create_directories(cfg.out);
            write_text(fs::path(cfg.out) / "sweep.csv", table.to_csv());
            write_text(fs::path(cfg.out) / "sweep.txt", "# " + config_to_json(cfg) + "\n" + table.to_text());
        }
    } catch (const UsageError& e) {
        std::cerr << "itemsum: usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PipelineError& e) {
        std::cerr << "itemsum: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "itemsum: error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
