#!/usr/bin/env python3
"""Generates the 85-sentence sample fixture under tests/data/sample85/.

The transactions are constructed so that Apriori at min_sup 0.07 yields
exactly these 32 itemsets, with coverage counts out of 85:

  30 Schizophrenia            20 Bipolar Disorder
  19 Bipolar Disorder+Schizophrenia, Autism Spectrum Disorders
  17 Autistic Disorder        15 neurex1     14 Deletion Mutation
  13 Autistic Disorder+Schizophrenia
  11 Genes, NRXN1 gene
   9 Autistic+Bipolar+Schizophrenia, Autistic+Bipolar, Copy Number
     Polymorphism, Genome, Persons
   8 Alleles, Study, Tryptophanase, Disease
   7 Binding (Molecular Function), Scientific Study, Reporting, Proteins
   6 neurex1+Binding, Deletion Mutation+NRXN1 gene,
     Schizophrenia+Autism Spectrum Disorders, Mental Retardation,
     Procedure findings, Staphylococcal Protein A, Encode (action),
     Genome-Wide Association Study, Diagnosis

Every other itemset covers at most 5 sentences. Sentences 2, 9 and 23
carry the three example transactions. Generic concepts from the blocked
semantic types are added throughout; left unfiltered they would be
frequent.

Run from the repository root: python3 tests/data/make_sample85.py
"""

import itertools
import json
import random
from collections import Counter
from pathlib import Path

TOTAL = 85
LIMIT = 5  # max coverage for any itemset not in the table

A, B, S, ASD = "Autistic Disorder", "Bipolar Disorder", "Schizophrenia", "Autism Spectrum Disorders"

SEMANTIC_TYPES = {
    A: "Mental or Behavioral Dysfunction",
    B: "Mental or Behavioral Dysfunction",
    S: "Mental or Behavioral Dysfunction",
    ASD: "Mental or Behavioral Dysfunction",
    "neurex1": "Amino Acid, Peptide, or Protein",
    "Deletion Mutation": "Cell or Molecular Dysfunction",
    "Genes": "Gene or Genome",
    "NRXN1 gene": "Gene or Genome",
    "Copy Number Polymorphism": "Cell or Molecular Dysfunction",
    "Genome": "Gene or Genome",
    "Persons": "Population Group",
    "Alleles": "Gene or Genome",
    "Study": "Research Activity",
    "Tryptophanase": "Enzyme",
    "Disease": "Disease or Syndrome",
    "Binding (Molecular Function)": "Molecular Function",
    "Scientific Study": "Research Activity",
    "Reporting": "Health Care Activity",
    "Proteins": "Amino Acid, Peptide, or Protein",
    "Mental Retardation": "Mental or Behavioral Dysfunction",
    "Procedure findings": "Finding",
    "Staphylococcal Protein A": "Bacterium",
    "Encode (action)": "Molecular Function",
    "Genome-Wide Association Study": "Research Activity",
    "Diagnosis": "Diagnostic Procedure",
    # infrequent concepts from the three example sentences
    "Study of Epidemiology": "Research Activity",
    "Mental disorders": "Mental or Behavioral Dysfunction",
    "Genetic Materials": "Gene or Genome",
    "Reference Object": "Manufactured Object",
    "family investigation": "Research Activity",
    "Family": "Family Group",
    "Breeding": "Organism Function",
    "Protein coding gene": "Gene or Genome",
}

# generic concepts; the semantic-type filter must remove them
BLOCKED = {
    "Widening": "Functional Concept",
    "analysis aspect": "Functional Concept",
    "Further": "Spatial Concept",
    "Relationships": "Qualitative Concept",
    "Etiology aspects": "Functional Concept",
    "Findings": "Functional Concept",
    "Increase": "Quantitative Concept",
    "Year": "Temporal Concept",
    "Evidence": "Idea or Concept",
    "Thinking": "Mental Process",
}

CORE_GROUPS = [  # (items, copies)
    ({A, B, S}, 9),
    ({B, S}, 10),
    ({B}, 1),
    ({A, S}, 4),
    ({A}, 4),
    ({S, ASD}, 6),
    ({S}, 1),
    ({ASD}, 13),
]

FIXED = {
    2: {"Study of Epidemiology", A, B, S, "Mental disorders", "Genetic Materials", "Persons"},
    9: {S, B, "Reference Object", "family investigation", "Family", "Disease", "Breeding"},
    23: {"Genome", "Protein coding gene", ASD},
}

FREQUENT_SINGLES = {
    "neurex1": 15, "Deletion Mutation": 14, "Genes": 11, "NRXN1 gene": 11,
    "Copy Number Polymorphism": 9, "Genome": 9, "Persons": 9, "Alleles": 8,
    "Study": 8, "Tryptophanase": 8, "Disease": 8, "Binding (Molecular Function)": 7,
    "Scientific Study": 7, "Reporting": 7, "Proteins": 7, "Mental Retardation": 6,
    "Procedure findings": 6, "Staphylococcal Protein A": 6, "Encode (action)": 6,
    "Genome-Wide Association Study": 6, "Diagnosis": 6,
}
REQUIRED_PAIRS = [("neurex1", "Binding (Molecular Function)"), ("Deletion Mutation", "NRXN1 gene")]
INFREQUENT = {"Study of Epidemiology": 3, "Mental disorders": 4, "Genetic Materials": 2,
              "Reference Object": 1, "family investigation": 2, "Family": 5, "Breeding": 1,
              "Protein coding gene": 3}

EXAMPLE_TEXTS = {
    2: "Genetic epidemiological studies of autism, bipolar disorder and schizophrenia show that the risk of "
       "developing one of these specific psychiatric illnesses is proportional to the amount of genetic "
       "material shared with an affected individual.",
    9: "The distinction between schizophrenia and bipolar disorder has been justified for many years by "
       "reference to family studies showing that these disorders seem to 'breed true'.",
    23: "Genome-wide analyses have also implicated further related and interacting synaptic protein-coding "
        "genes in the etiology of ASDs.",
}


def allowed_pairs():
    return {frozenset(p) for p in [(A, B), (A, S), (B, S), (S, ASD)] + REQUIRED_PAIRS}


def try_build(rng):
    sentences = [set() for _ in range(TOTAL)]
    # core disease structure: fixed sentences first, rest placed randomly
    slots = list(range(TOTAL))
    core = []
    for items, copies in CORE_GROUPS:
        core += [set(items)] * copies
    for idx, items in FIXED.items():
        core_part = items & {A, B, S, ASD}
        core.remove(core_part)
        sentences[idx] |= items
        slots.remove(idx)
    rng.shuffle(slots)
    for slot, items in zip(slots, core):
        sentences[slot] |= items

    counts = Counter()
    for s in sentences:
        counts.update(s)
    target = dict(FREQUENT_SINGLES)
    target.update(INFREQUENT)
    target.update({A: 17, B: 20, S: 30, ASD: 19})
    ok_pairs = allowed_pairs()

    def pair_count(x, y):
        return sum(1 for s in sentences if x in s and y in s)

    def can_add(idx, item):
        s = sentences[idx]
        if item in s:
            return False
        for other in s:
            if frozenset((item, other)) in ok_pairs:
                continue
            if pair_count(item, other) + 1 > LIMIT:
                return False
        return True

    # required pairs, six joint occurrences each
    for x, y in REQUIRED_PAIRS:
        order = list(range(TOTAL))
        rng.shuffle(order)
        placed = 0
        for idx in order:
            if placed == 6:
                break
            if idx in FIXED:
                continue
            if can_add(idx, x) and can_add(idx, y):
                sentences[idx] |= {x, y}
                counts.update([x, y])
                placed += 1
        if placed < 6:
            return None

    fill = [item for item, n in target.items()]
    rng.shuffle(fill)
    for item in fill:
        partner = {x: y for x, y in REQUIRED_PAIRS} | {y: x for x, y in REQUIRED_PAIRS}
        order = list(range(TOTAL))
        rng.shuffle(order)
        for idx in order:
            if counts[item] >= target[item]:
                break
            if idx in FIXED:
                continue
            if item in partner and partner[item] in sentences[idx]:
                continue
            if can_add(idx, item):
                sentences[idx].add(item)
                counts[item] += 1
        if counts[item] != target[item]:
            return None
    return sentences


def frequent_itemsets(sentences, min_count):
    universe = sorted(set().union(*sentences))
    found = {}
    level = [frozenset([i]) for i in universe]
    while level:
        kept = []
        for cand in level:
            c = sum(1 for s in sentences if cand <= s)
            if c >= min_count:
                found[cand] = c
                kept.append(cand)
        nxt = set()
        for a, b in itertools.combinations(kept, 2):
            u = a | b
            if len(u) == len(a) + 1:
                nxt.add(u)
        level = list(nxt)
    return found


def main():
    rng = random.Random(20170101)
    for _ in range(1000):
        sentences = try_build(rng)
        if sentences is not None:
            break
    else:
        raise SystemExit("could not construct fixture")

    found = frequent_itemsets(sentences, 6)  # 6/85 >= 0.07 > 5/85
    sizes = Counter(len(k) for k in found)
    assert len(found) == 32 and sizes == {1: 25, 2: 6, 3: 1}, (len(found), sizes)

    # sprinkle blocked concepts; each would be frequent if unfiltered
    blocked_names = sorted(BLOCKED)
    for idx in range(TOTAL):
        for name in blocked_names:
            if (idx * 7 + len(name)) % 4 == 0:
                sentences[idx].add(name)
    sentences[23] |= {"Widening", "analysis aspect", "Further", "Relationships", "Etiology aspects"}

    names = sorted(set(SEMANTIC_TYPES) | set(BLOCKED))
    cuis = {name: "C%07d" % (9100000 + i) for i, name in enumerate(names)}
    cuis["Genome"] = "C0017428"
    types = dict(SEMANTIC_TYPES)
    types.update(BLOCKED)

    out = Path(__file__).resolve().parent / "sample85"
    out.mkdir(exist_ok=True)
    lines = []
    with open(out / "sample85.annotations.jsonl", "w") as ann:
        for idx, items in enumerate(sentences):
            ordered = sorted(items)
            if idx in EXAMPLE_TEXTS:
                lines.append(EXAMPLE_TEXTS[idx])
            elif ordered:
                lines.append("Sentence %d relates %s." % (idx, ", ".join(ordered).lower()))
            else:
                lines.append("Sentence %d carries no mapped concepts." % idx)
            if not ordered:
                continue
            concepts = [{"concept_id": cuis[n], "preferred_name": n, "semantic_type": types[n]} for n in ordered]
            ann.write(json.dumps({"sentence_index": idx, "concepts": concepts}) + "\n")
    (out / "sample85.lines").write_text("\n".join(lines) + "\n")
    print("wrote", out)


if __name__ == "__main__":
    main()
