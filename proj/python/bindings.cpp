// Python bindings for the itemsum library.
//
// Exact values (supports, scores, thresholds) cross the boundary as
// fractions.Fraction; thresholds and rates also accept str, int or float.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "itemsum/annotation.hpp"
#include "itemsum/document.hpp"
#include "itemsum/harness.hpp"
#include "itemsum/miner.hpp"
#include "itemsum/porter.hpp"
#include "itemsum/rouge.hpp"
#include "itemsum/summarizer.hpp"
#include "itemsum/transactions.hpp"

namespace py = pybind11;
using namespace itemsum;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    if (py::isinstance<py::float_>(obj)) {
        // repr gives the shortest round-trip decimal, so 0.08 stays 8/100
        return Rational::parse(py::repr(obj).cast<std::string>());
    }
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        return Rational(obj.attr("numerator").cast<std::int64_t>(), obj.attr("denominator").cast<std::int64_t>());
    }
    throw py::type_error("expected a str, int, float or Fraction");
}

WordSet word_set(const std::optional<std::vector<std::string>>& words, const WordSet& fallback, bool lowercase) {
    if (!words) return fallback;
    WordSet out;
    for (const auto& w : *words) out.insert(lowercase ? to_lower_ascii(w) : w);
    return out;
}

py::dict score_dict(const RougeScore& s) {
    py::dict d;
    d["recall"] = s.recall;
    d["precision"] = s.precision;
    d["f1"] = s.f1;
    return d;
}

std::vector<ConceptAnnotation> annotations_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_concept_annotations(obj.cast<std::string>());
    return obj.cast<std::vector<ConceptAnnotation>>();
}

}  // namespace

PYBIND11_MODULE(itemsum, m) {
    m.doc() = "Itemset-based extractive summarization and ROUGE evaluation";

    py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
    py::register_exception<AnnotationError>(m, "AnnotationError", PyExc_ValueError);
    py::register_exception<PipelineError>(m, "PipelineError", PyExc_RuntimeError);

    // --- documents ---------------------------------------------------------
    py::class_<Sentence>(m, "Sentence")
        .def_readonly("index", &Sentence::index)
        .def_readonly("text", &Sentence::text)
        .def_property_readonly("span", [](const Sentence& s) { return py::make_tuple(s.span.start, s.span.end); })
        .def_readonly("word_count", &Sentence::word_count)
        .def("__repr__", [](const Sentence& s) { return "<Sentence " + std::to_string(s.index) + ": " + s.text + ">"; });

    py::class_<Document>(m, "Document")
        .def_readonly("id", &Document::id)
        .def_readonly("title", &Document::title)
        .def_readonly("sentences", &Document::sentences)
        .def_readonly("source_text", &Document::source_text)
        .def_property_readonly("source_format",
                               [](const Document& d) { return std::string(to_string(d.source_format)); })
        .def("__len__", &Document::size);

    m.def(
        "parse_document",
        [](const std::string& raw, const std::string& format, const std::string& id,
           const std::optional<std::vector<std::string>>& abbreviations) {
            const AbbreviationList abbrevs = abbreviations ? AbbreviationList(*abbreviations) : AbbreviationList();
            return parse_document(raw, parse_source_format(format), id, abbrevs);
        },
        py::arg("text"), py::arg("format") = "plain", py::arg("id") = "document", py::arg("abbreviations") = py::none(),
        "Parse plain text, structured JSON ('json') or one sentence per line ('lines').");

    m.def(
        "segment_sentences",
        [](const std::string& text) {
            std::vector<std::string> out;
            for (const auto& s : segment_sentences(text)) out.push_back(s.text);
            return out;
        },
        py::arg("text"), "Split text into sentence strings with the bundled abbreviation list.");

    // --- items -------------------------------------------------------------
    m.def("porter_stem", &porter_stem, py::arg("word"));

    m.def(
        "term_items",
        [](const std::string& text, const std::optional<std::vector<std::string>>& stopwords) {
            std::vector<std::string> out;
            for (const auto& item : term_items(text, word_set(stopwords, default_stopwords(), true))) {
                out.push_back(item.key);
            }
            return out;
        },
        py::arg("text"), py::arg("stopwords") = py::none());

    py::class_<Concept>(m, "Concept")
        .def(py::init<std::string, std::string, std::string>(), py::arg("concept_id"), py::arg("preferred_name"),
             py::arg("semantic_type"))
        .def_readwrite("concept_id", &Concept::concept_id)
        .def_readwrite("preferred_name", &Concept::preferred_name)
        .def_readwrite("semantic_type", &Concept::semantic_type);

    py::class_<ConceptAnnotation>(m, "ConceptAnnotation")
        .def(py::init<std::size_t, std::vector<Concept>>(), py::arg("sentence_index"), py::arg("concepts"))
        .def_readwrite("sentence_index", &ConceptAnnotation::sentence_index)
        .def_readwrite("concepts", &ConceptAnnotation::concepts);

    m.def("parse_concept_annotations", &parse_concept_annotations, py::arg("jsonl"));
    m.def(
        "filter_semantic_types",
        [](const std::vector<ConceptAnnotation>& anns, const std::optional<std::vector<std::string>>& blocked) {
            return filter_semantic_types(anns, word_set(blocked, default_blocked_semantic_types(), true));
        },
        py::arg("annotations"), py::arg("blocked_types") = py::none());

    // --- transactions and mining --------------------------------------------
    py::class_<TransactionSet>(m, "TransactionSet")
        .def(py::init<const std::vector<std::vector<std::string>>&>(), py::arg("item_lists"))
        .def_property_readonly("transactions",
                               [](const TransactionSet& ts) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& t : ts.transactions()) out.push_back(t.items);
                                   return out;
                               })
        .def_property_readonly("item_universe", &TransactionSet::item_universe)
        .def_property_readonly("total", &TransactionSet::total)
        .def("display", &TransactionSet::display, py::arg("key"))
        .def("__len__", &TransactionSet::total)
        .def("to_json", &transactions_to_json);

    m.def(
        "build_transactions",
        [](const Document& doc, const std::string& mode, const py::object& annotations,
           const std::optional<std::vector<std::string>>& stopwords,
           const std::optional<std::vector<std::string>>& blocked_types) {
            ItemSource source;
            source.mode = parse_item_mode(mode);
            if (source.mode == ItemMode::concept_ids) {
                if (annotations.is_none()) throw py::value_error("concept mode requires annotations");
                source.annotations = AnnotationTable(filter_semantic_types(
                    annotations_arg(annotations), word_set(blocked_types, default_blocked_semantic_types(), true)));
            } else {
                source.stopwords = word_set(stopwords, default_stopwords(), true);
            }
            return build_transactions(doc, source);
        },
        py::arg("document"), py::arg("mode") = "term", py::arg("annotations") = py::none(),
        py::arg("stopwords") = py::none(), py::arg("blocked_types") = py::none(),
        "Annotations may be JSON-lines text or a list of ConceptAnnotation.");

    py::class_<FrequentItemset>(m, "FrequentItemset")
        .def_readonly("items", &FrequentItemset::items)
        .def_property_readonly("count", [](const FrequentItemset& f) { return f.support.count; })
        .def_property_readonly("total", [](const FrequentItemset& f) { return f.support.total; })
        .def_property_readonly("support", [](const FrequentItemset& f) { return to_fraction(f.support.value()); })
        .def_property_readonly("display_support", [](const FrequentItemset& f) { return f.support.display(); })
        .def(py::self == py::self)
        .def("__repr__", [](const FrequentItemset& f) {
            std::string s = "<FrequentItemset {";
            for (std::size_t i = 0; i < f.items.size(); ++i) s += (i ? ", " : "") + f.items[i];
            return s + "} " + std::to_string(f.support.count) + "/" + std::to_string(f.support.total) + ">";
        });

    m.def(
        "support",
        [](const std::vector<std::string>& itemset, const TransactionSet& ts) {
            return to_fraction(support(itemset, ts).value());
        },
        py::arg("itemset"), py::arg("transactions"));

    m.def(
        "is_frequent",
        [](const std::vector<std::string>& itemset, const TransactionSet& ts, const py::object& min_sup) {
            return is_frequent(itemset, ts, to_rational(min_sup));
        },
        py::arg("itemset"), py::arg("transactions"), py::arg("min_sup"));

    m.def(
        "apriori",
        [](const TransactionSet& ts, const py::object& min_sup, std::optional<std::size_t> max_size) {
            MinerConfig cfg{to_rational(min_sup), max_size};
            py::gil_scoped_release release;
            return apriori(ts, cfg);
        },
        py::arg("transactions"), py::arg("min_sup") = "0.08", py::arg("max_size") = py::none(),
        "Frequent itemsets in canonical order (support descending, then items).");

    // --- scoring and selection -----------------------------------------------
    py::class_<SentenceScore>(m, "SentenceScore")
        .def_readonly("sentence_index", &SentenceScore::sentence_index)
        .def_property_readonly("score", [](const SentenceScore& s) { return to_fraction(s.score); })
        .def_readonly("covering_itemsets", &SentenceScore::covering_itemsets)
        .def(py::self == py::self);

    m.def("score_sentences", &score_sentences, py::arg("itemsets"), py::arg("transactions"));

    m.def(
        "compression_to_count",
        [](const py::object& rate, std::size_t total) { return compression_to_count(to_rational(rate), total); },
        py::arg("rate"), py::arg("total_sentences"));

    m.def("select_sentences", &select_sentences, py::arg("scores"), py::arg("document"), py::arg("n"));
    m.def("render_summary", &render_summary, py::arg("document"), py::arg("selected_indices"));

    m.def(
        "lead_baseline", [](const Document& doc, std::size_t n) { return lead_baseline(doc, n).selected_indices; },
        py::arg("document"), py::arg("n"));
    m.def(
        "random_baseline",
        [](const Document& doc, std::size_t n, std::uint64_t seed) {
            return random_baseline(doc, n, seed).selected_indices;
        },
        py::arg("document"), py::arg("n"), py::arg("seed"));

    m.def(
        "summarize",
        [](const Document& doc, const TransactionSet& ts, const std::vector<FrequentItemset>& itemsets, std::size_t n) {
            const SummaryResult r = summarize(doc, ts, itemsets, n);
            py::dict d;
            d["selected"] = r.selected_indices;
            d["scores"] = r.scores;
            d["text"] = r.rendered_text;
            return d;
        },
        py::arg("document"), py::arg("transactions"), py::arg("itemsets"), py::arg("n"));

    m.def(
        "summarize_file",
        [](const std::filesystem::path& path, const std::string& mode, const py::object& min_sup,
           const py::object& rate, const std::optional<std::string>& annotations, const std::string& kind,
           std::optional<std::uint64_t> seed) {
            RunConfig cfg;
            cfg.mode = parse_item_mode(mode);
            if (!min_sup.is_none()) cfg.min_sup = to_rational(min_sup);
            cfg.compression_rate = to_rational(rate);
            cfg.annotations = annotations;
            cfg.seed = seed;
            cfg.validate();
            SummaryOutputs out;
            {
                py::gil_scoped_release release;
                out = summarize_file(path, cfg, parse_summary_kind(kind));
            }
            py::dict d;
            d["id"] = out.id;
            d["n"] = out.n;
            d["selected"] = out.result.selected_indices;
            d["summary"] = out.summary_text;
            d["itemsets"] = out.itemsets;
            d["result_json"] = out.result_json;
            return d;
        },
        py::arg("path"), py::arg("mode") = "concept", py::arg("min_sup") = py::none(), py::arg("rate") = "0.3",
        py::arg("annotations") = py::none(), py::arg("kind") = "itemset", py::arg("seed") = py::none(),
        "Run the full pipeline (or a 'lead'/'random' baseline) on a document file.");

    // --- ROUGE ---------------------------------------------------------------
    m.def(
        "rouge_tokens", [](const std::string& text, bool stem) { return rouge_tokens(text, {stem}); },
        py::arg("text"), py::arg("stem") = false);
    m.def(
        "rouge_n",
        [](const std::vector<std::string>& sys, const std::vector<std::string>& model, int n) {
            return score_dict(rouge_n(sys, model, n));
        },
        py::arg("system"), py::arg("model"), py::arg("n"));
    m.def(
        "rouge_w",
        [](const std::vector<std::string>& sys, const std::vector<std::string>& model, double weight) {
            return score_dict(rouge_w(sys, model, weight));
        },
        py::arg("system"), py::arg("model"), py::arg("weight") = 1.2);
    m.def(
        "rouge_su",
        [](const std::vector<std::string>& sys, const std::vector<std::string>& model, int max_skip) {
            return score_dict(rouge_su(sys, model, max_skip));
        },
        py::arg("system"), py::arg("model"), py::arg("max_skip") = 4);
    m.def("weighted_lcs", &weighted_lcs, py::arg("a"), py::arg("b"), py::arg("weight") = 1.2);

    m.def(
        "evaluate_summary",
        [](const std::string& system, const std::vector<std::string>& models, const std::string& metrics, bool stem) {
            py::dict d;
            for (const auto& [metric, score] : evaluate_summary(system, models, parse_rouge_metrics(metrics), {stem})) {
                d[py::str(std::string(to_string(metric)))] = score_dict(score);
            }
            return d;
        },
        py::arg("system"), py::arg("models"), py::arg("metrics") = "all", py::arg("stem") = false,
        "Scores against the best-recall model for each of R1, R2, RW12, RSU4.");
}
