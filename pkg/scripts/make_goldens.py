#!/usr/bin/env python3
"""Freeze golden expectations for the bundled fixture corpus.

All values are computed by the independent oracle implementations in
tests/oracles.py and tests/oracle_corpus.py (brute-force counting and
full-scan scoring), then written to tests/goldens/ for the test suite to
assert against. Run from the repo root:

    python3 scripts/make_goldens.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from tests import oracles  # noqa: E402
from tests.oracle_corpus import build_oracle_corpus, load_taxonomy_raw, norm_title_key  # noqa: E402

GOLDENS = ROOT / "tests" / "goldens"

CLASSIFIER_SUBSET_TITLES = [
    "Scalable Big Data Processing Pipelines",
    "Relevance Ranking with an Inverted Index",
    "Agile Code Review Practice in Industry",
    "Neural Correlates of Code Comprehension",
    "Design Patterns for Big Data Systems",
    "Teaching Object-Oriented Programming with Inheritance Games",
    "Expert Finding for Institutional Research Corpora",
    "Query Optimization in Modern Database Engines",
    "Language Models for German Academic Text",
    "Regelungstechnik für autonome Systeme",
]

POSITIVE_LIST = ["Big Data", "Information Retrieval", "Machine Learning", "Databases", "Robotics"]


def write(name: str, payload: object) -> None:
    path = GOLDENS / name
    path.write_text(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n", "utf-8")
    print(f"wrote {path}")


def main() -> None:
    GOLDENS.mkdir(exist_ok=True)
    corpus = build_oracle_corpus()
    taxonomy = load_taxonomy_raw()
    docs = corpus.oracle_docs()

    # Classifier assignments for the designated 10-document subset.
    by_title = {doc["title"]: doc for doc in corpus.docs.values()}
    table = {}
    for title in CLASSIFIER_SUBSET_TITLES:
        doc = by_title[title]
        table[title] = [
            [label, confidence] for label, confidence in oracles.classify(doc["title"], doc["body"], taxonomy)
        ]
    write("classifier_assignments.json", table)

    # Term/document statistics over the 40-document corpus.
    term_stats: dict[str, dict[str, int]] = {}
    for doc in docs:
        for field in oracles.FIELDS:
            for term in set(doc.fields[field]):
                term_stats.setdefault(term, {}).setdefault(field, 0)
                term_stats[term][field] += 1
    stats = {
        "doc_count": len(docs),
        "avg_field_lengths": {
            field: sum(len(d.fields[field]) for d in docs) / len(docs) for field in oracles.FIELDS
        },
        "total_tokens": {
            field: sum(len(d.fields[field]) for d in docs) for field in oracles.FIELDS
        },
        "distinct_terms": len(term_stats),
        "df_by_term": term_stats,
    }
    write("index_stats.json", stats)

    # Top-10 documents for the flagship query.
    top10 = oracles.search_scores(docs, "big data")[:10]
    write("search_bigdata_top10.json", [[key, score] for key, score in top10])

    # Expert ranking for the flagship query (researcher names, ordered).
    experts = oracles.rank_experts(docs, corpus.researcher_docs, corpus.researcher_areas, "big data")
    write(
        "experts_bigdata.json",
        [[corpus.researcher_names[rid], rid, score] for rid, score in experts],
    )

    # Research-field table.
    rows = oracles.fields_table(corpus.researcher_areas, corpus.doc_areas())
    write("fields_table.json", [[label, r, p] for label, r, p in rows])

    # Word cloud, with and without the positive list.
    write("wordcloud.json", [[text, weight] for text, weight in oracles.wordcloud(corpus.researcher_areas)])
    write(
        "wordcloud_positive.json",
        [[text, weight] for text, weight in oracles.wordcloud(corpus.researcher_areas, set(POSITIVE_LIST))],
    )

    # Pipeline cardinalities the CLI tests assert.
    records = [
        json.loads(line)
        for line in (ROOT / "fixtures" / "publications.jsonl").read_text("utf-8").splitlines()
        if line.strip()
    ]
    bodies_present = sum(1 for r in records if r.get("body_text", "").strip())
    keys = {norm_title_key(r["title"], r.get("year")) for r in records}
    write(
        "pipeline_counts.json",
        {
            "researchers": len(corpus.researcher_names),
            "publication_records": len(records),
            "unique_publications": len(keys),
            "duplicates": len(records) - len(keys),
            "bodies_present_records": bodies_present,
            "store_docs_with_body": sum(1 for doc in corpus.docs.values() if doc["body"]),
            "distinct_area_labels": len(
                {lbl for labels in corpus.researcher_areas.values() for lbl in labels}
            ),
        },
    )


if __name__ == "__main__":
    main()
