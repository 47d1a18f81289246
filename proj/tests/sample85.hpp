#pragma once

// The 85-sentence sample document and its concept transactions.

#include <map>
#include <string>
#include <vector>

#include "itemsum/annotation.hpp"
#include "itemsum/document.hpp"
#include "itemsum/text.hpp"
#include "itemsum/transactions.hpp"

namespace sample85 {

inline std::string dir() { return std::string(ITEMSUM_TEST_DATA) + "/sample85"; }

inline itemsum::Document document() {
    return itemsum::parse_document(itemsum::read_file(dir() + "/sample85.lines"),
                                   itemsum::SourceFormat::pre_segmented, "sample85");
}

inline itemsum::TransactionSet transactions() {
    itemsum::ItemSource source;
    source.annotations = itemsum::AnnotationTable(
        itemsum::filter_semantic_types(itemsum::load_concept_annotations(dir() + "/sample85.annotations.jsonl")));
    return itemsum::build_transactions(document(), source);
}

/// preferred name -> concept id
inline std::map<std::string, std::string> concept_ids() {
    std::map<std::string, std::string> ids;
    for (const auto& a : itemsum::load_concept_annotations(dir() + "/sample85.annotations.jsonl")) {
        for (const auto& c : a.concepts) ids[c.preferred_name] = c.concept_id;
    }
    return ids;
}

inline std::vector<std::string> ids_of(const std::vector<std::string>& names) {
    const auto ids = concept_ids();
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(ids.at(n));
    return out;
}

/// Frequent itemsets expected at min_sup 0.07, by preferred name, with
/// supports as displayed to three decimals.
inline const std::vector<std::pair<std::vector<std::string>, double>>& expected_itemsets() {
    static const std::vector<std::pair<std::vector<std::string>, double>> table = {
        {{"Schizophrenia"}, 0.352},
        {{"Bipolar Disorder"}, 0.235},
        {{"Bipolar Disorder", "Schizophrenia"}, 0.223},
        {{"Autism Spectrum Disorders"}, 0.223},
        {{"Autistic Disorder"}, 0.200},
        {{"neurex1"}, 0.176},
        {{"Deletion Mutation"}, 0.164},
        {{"Autistic Disorder", "Schizophrenia"}, 0.152},
        {{"Genes"}, 0.129},
        {{"NRXN1 gene"}, 0.129},
        {{"Autistic Disorder", "Bipolar Disorder", "Schizophrenia"}, 0.105},
        {{"Autistic Disorder", "Bipolar Disorder"}, 0.105},
        {{"Copy Number Polymorphism"}, 0.105},
        {{"Genome"}, 0.105},
        {{"Persons"}, 0.105},
        {{"Alleles"}, 0.094},
        {{"Study"}, 0.094},
        {{"Tryptophanase"}, 0.094},
        {{"Disease"}, 0.094},
        {{"Binding (Molecular Function)"}, 0.082},
        {{"Scientific Study"}, 0.082},
        {{"Reporting"}, 0.082},
        {{"Proteins"}, 0.082},
        {{"neurex1", "Binding (Molecular Function)"}, 0.070},
        {{"Deletion Mutation", "NRXN1 gene"}, 0.070},
        {{"Schizophrenia", "Autism Spectrum Disorders"}, 0.070},
        {{"Mental Retardation"}, 0.070},
        {{"Procedure findings"}, 0.070},
        {{"Staphylococcal Protein A"}, 0.070},
        {{"Encode (action)"}, 0.070},
        {{"Genome-Wide Association Study"}, 0.070},
        {{"Diagnosis"}, 0.070},
    };
    return table;
}

}  // namespace sample85
