"""Immutable inverted index with field-weighted BM25 scoring, expert
aggregation, field listing, and word-cloud statistics.

Snapshots are the only unit of publication: build once, persist with a
versioned magic header, share read-only across any number of readers.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .docproc import all_stopwords, bigrams, tokenize, token_texts
from .model import (
    AreaAssignment,
    AreaSource,
    PublicationId,
    ResearcherId,
    normalize_label,
)
from .store import CorpusStore

SNAPSHOT_MAGIC = b"RISIDX1"

FIELDS = ("title", "body", "areas")


class SnapshotVersionError(ValueError):
    """The snapshot file carries a different version tag than this engine."""


@dataclass(frozen=True)
class RankingConfig:
    """Every invented ranking constant in one place."""

    k1: float = 1.2
    b: float = 0.75
    field_weights: tuple[tuple[str, float], ...] = (("title", 2.5), ("areas", 3.0), ("body", 1.0))
    # Per-researcher document-score decay: d1 + 0.5*d2 + 0.25*d3.
    doc_decay: tuple[float, ...] = (1.0, 0.5, 0.25)
    # Bonus per research-area label matched by the query; an explicit area
    # match must outrank an incidental body mention.
    area_bonus: float = 2.0

    def weight(self, field_name: str) -> float:
        return dict(self.field_weights)[field_name]


@dataclass(frozen=True)
class Posting:
    doc: PublicationId
    field: str
    term_frequency: int

    def __post_init__(self) -> None:
        if self.term_frequency < 1:
            raise ValueError("term_frequency must be >= 1")
        if self.field not in FIELDS:
            raise ValueError(f"unknown field {self.field!r}")


@dataclass(frozen=True)
class ExpertHit:
    researcher: ResearcherId
    score: float
    matched_areas: tuple[str, ...]
    top_documents: tuple[tuple[PublicationId, float], ...]
    explanation: str


@dataclass(frozen=True)
class IndexSnapshot:
    postings: Mapping[str, tuple[Posting, ...]]
    doc_lengths: Mapping[tuple[PublicationId, str], int]
    avg_field_lengths: Mapping[str, float]
    doc_count: int
    researcher_docs: Mapping[ResearcherId, tuple[PublicationId, ...]]
    researcher_areas: Mapping[ResearcherId, tuple[AreaAssignment, ...]]
    doc_areas: Mapping[PublicationId, tuple[str, ...]]
    build_timestamp: str

    def document_ids(self) -> list[PublicationId]:
        docs = {doc for doc, _ in self.doc_lengths}
        docs.update(p.doc for plist in self.postings.values() for p in plist)
        return sorted(docs)

    def validate(self) -> None:
        docs = self.document_ids()
        if len(docs) != self.doc_count:
            raise ValueError(f"doc_count {self.doc_count} != {len(docs)} distinct documents")
        known = {doc for doc, _ in self.doc_lengths}
        for plist in self.postings.values():
            for posting in plist:
                if posting.doc not in known:
                    raise ValueError(f"posting for unknown document {posting.doc}")
        for field_name in FIELDS:
            total = sum(
                length for (_, fname), length in self.doc_lengths.items() if fname == field_name
            )
            expected = total / self.doc_count if self.doc_count else 0.0
            stored = self.avg_field_lengths.get(field_name, 0.0)
            if abs(stored - expected) > 1e-9:
                raise ValueError(f"avg_field_lengths[{field_name}] inconsistent with doc_lengths")


def build_index(store: CorpusStore, build_timestamp: str | None = None) -> IndexSnapshot:
    """Build an immutable snapshot over a classified, merged corpus.

    Deterministic: identical corpus content yields a byte-identical
    persisted snapshot. The default build stamp is therefore derived from
    the indexed content, not the wall clock; pass `build_timestamp` to
    record a real timestamp instead.
    """
    postings: dict[str, list[Posting]] = {}
    doc_lengths: dict[tuple[PublicationId, str], int] = {}
    doc_areas: dict[PublicationId, tuple[str, ...]] = {}
    totals = {field_name: 0 for field_name in FIELDS}

    for pid in sorted(store.publications):
        pub = store.publications[pid]
        area_text = " ".join(a.label for a in pub.area_assignments)
        per_field = {
            "title": token_texts(pub.title),
            "body": token_texts(pub.body_text),
            "areas": token_texts(area_text),
        }
        for field_name in FIELDS:
            tokens = per_field[field_name]
            doc_lengths[(pid, field_name)] = len(tokens)
            totals[field_name] += len(tokens)
            counts: dict[str, int] = {}
            for tok in tokens:
                counts[tok] = counts.get(tok, 0) + 1
            for term in sorted(counts):
                postings.setdefault(term, []).append(Posting(pid, field_name, counts[term]))
        doc_areas[pid] = tuple(sorted({a.normalized_label for a in pub.area_assignments}))

    doc_count = len(store.publications)
    avg = {
        field_name: (totals[field_name] / doc_count if doc_count else 0.0)
        for field_name in FIELDS
    }
    researcher_docs = {
        rid: tuple(sorted(store.researchers[rid].publication_ids))
        for rid in sorted(store.researchers)
    }
    researcher_areas = {
        rid: tuple(store.researchers[rid].areas) for rid in sorted(store.researchers)
    }
    snapshot = IndexSnapshot(
        postings=MappingProxyType({term: tuple(plist) for term, plist in postings.items()}),
        doc_lengths=MappingProxyType(doc_lengths),
        avg_field_lengths=MappingProxyType(avg),
        doc_count=doc_count,
        researcher_docs=MappingProxyType(researcher_docs),
        researcher_areas=MappingProxyType(researcher_areas),
        doc_areas=MappingProxyType(doc_areas),
        build_timestamp=build_timestamp or f"content:{_content_digest(postings, doc_lengths)}",
    )
    snapshot.validate()
    return snapshot


def _content_digest(
    postings: Mapping[str, list[Posting]], doc_lengths: Mapping[tuple[PublicationId, str], int]
) -> str:
    hasher = hashlib.sha256()
    for term in sorted(postings):
        hasher.update(term.encode("utf-8"))
        for posting in postings[term]:
            hasher.update(f"{posting.doc}/{posting.field}/{posting.term_frequency}".encode())
    for (doc, field_name), length in sorted(doc_lengths.items()):
        hasher.update(f"{doc}/{field_name}={length}".encode())
    return hasher.hexdigest()[:16]


def bm25_field_score(
    tf: int,
    df: int,
    n_docs: int,
    field_len: float,
    avg_field_len: float,
    k1: float = 1.2,
    b: float = 0.75,
) -> float:
    """Okapi BM25 contribution of one term in one field of one document.

    idf = ln(1 + (N - df + 0.5) / (df + 0.5)), always positive, so a
    higher tf never lowers the score and a higher df never raises it.
    """
    if tf < 1:
        raise ValueError("tf must be >= 1")
    if not 1 <= df <= n_docs:
        raise ValueError("df must satisfy 1 <= df <= N")
    if field_len <= 0 or avg_field_len <= 0:
        raise ValueError("field lengths must be positive")
    idf = math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))
    return idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * field_len / avg_field_len))


def _field_statistics(
    snapshot: IndexSnapshot,
) -> tuple[dict[tuple[str, str], dict[PublicationId, int]], dict[tuple[str, str], int]]:
    """(term, field) -> {doc: tf} and (term, field) -> document frequency."""
    tf_map: dict[tuple[str, str], dict[PublicationId, int]] = {}
    for term, plist in snapshot.postings.items():
        for posting in plist:
            tf_map.setdefault((term, posting.field), {})[posting.doc] = posting.term_frequency
    df_map = {key: len(docs) for key, docs in tf_map.items()}
    return tf_map, df_map


def search_documents(
    query: str, snapshot: IndexSnapshot, cfg: RankingConfig = RankingConfig()
) -> list[tuple[PublicationId, float]]:
    """Field-weighted BM25 document scores for a free-text query.

    Query terms contribute per occurrence; documents scoring zero are
    omitted; ties are broken by ascending publication id.
    """
    query_terms = token_texts(query)
    if not query_terms or snapshot.doc_count == 0:
        return []
    tf_map, df_map = _field_statistics(snapshot)
    scores: dict[PublicationId, float] = {}
    for term in query_terms:
        for field_name in FIELDS:
            postings_for_field = tf_map.get((term, field_name))
            if not postings_for_field:
                continue
            df = df_map[(term, field_name)]
            avg_len = snapshot.avg_field_lengths[field_name]
            weight = cfg.weight(field_name)
            for doc, tf in postings_for_field.items():
                contribution = weight * bm25_field_score(
                    tf,
                    df,
                    snapshot.doc_count,
                    snapshot.doc_lengths[(doc, field_name)],
                    avg_len,
                    cfg.k1,
                    cfg.b,
                )
                scores[doc] = scores.get(doc, 0.0) + contribution
    ranked = [(doc, score) for doc, score in scores.items() if score > 0.0]
    ranked.sort(key=lambda item: (-item[1], item[0]))
    return ranked


def _query_matches_label(query_norm: str, query_tokens: frozenset[str], label: str) -> bool:
    norm = normalize_label(label)
    if query_norm == norm:
        return True
    label_tokens = set(token_texts(label))
    return bool(query_tokens) and query_tokens <= label_tokens


def rank_experts(
    query: str, snapshot: IndexSnapshot, cfg: RankingConfig = RankingConfig()
) -> list[ExpertHit]:
    """Aggregate document scores into ranked researchers.

    Per researcher, the top three document scores decay 1/0.5/0.25 and
    every matched area label adds a fixed bonus; a label matches when the
    normalized query equals it or every query token occurs in it.
    Researchers scoring zero are omitted.
    """
    query_tokens = frozenset(token_texts(query))
    if not query_tokens:
        return []
    query_norm = normalize_label(query)
    doc_scores = dict(search_documents(query, snapshot, cfg))
    hits: list[ExpertHit] = []
    for rid in sorted(snapshot.researcher_docs):
        scored_docs = [
            (doc, doc_scores[doc])
            for doc in snapshot.researcher_docs[rid]
            if doc in doc_scores
        ]
        scored_docs.sort(key=lambda item: (-item[1], item[0]))
        top = scored_docs[: len(cfg.doc_decay)]
        matched: dict[str, str] = {}
        for area in snapshot.researcher_areas.get(rid, ()):
            if _query_matches_label(query_norm, query_tokens, area.label):
                matched.setdefault(area.normalized_label, area.label)
        score = sum(decay * doc_score for decay, (_, doc_score) in zip(cfg.doc_decay, top))
        score += cfg.area_bonus * len(matched)
        if score <= 0.0:
            continue
        matched_labels = tuple(matched[norm] for norm in sorted(matched))
        if top:
            explanation = (
                f"{len(matched)} matching area(s), {len(scored_docs)} matching document(s), "
                f"top document score {top[0][1]:.4f}"
            )
        else:
            explanation = f"{len(matched)} matching area(s), no matching documents"
        hits.append(ExpertHit(rid, score, matched_labels, tuple(top), explanation))
    hits.sort(key=lambda hit: (-hit.score, hit.researcher))
    return hits


def list_research_fields(snapshot: IndexSnapshot) -> list[tuple[str, int, int]]:
    """(label, researcher_count, publication_count) per distinct normalized label."""
    researcher_counts: dict[str, int] = {}
    for areas in snapshot.researcher_areas.values():
        for norm in {a.normalized_label for a in areas}:
            researcher_counts[norm] = researcher_counts.get(norm, 0) + 1
    publication_counts: dict[str, int] = {}
    for labels in snapshot.doc_areas.values():
        for norm in labels:
            publication_counts[norm] = publication_counts.get(norm, 0) + 1
    rows = [
        (label, researcher_counts.get(label, 0), publication_counts.get(label, 0))
        for label in sorted(set(researcher_counts) | set(publication_counts))
    ]
    rows.sort(key=lambda row: (-row[1], row[0]))
    return rows


def wordcloud_item_text(item: str | tuple[str, str]) -> str:
    return item if isinstance(item, str) else " ".join(item)


def wordcloud_counts(
    snapshot: IndexSnapshot, positive_list: Iterable[str] | None = None
) -> list[tuple[str | tuple[str, str], int]]:
    """Word-cloud items over researcher area labels.

    Single-token labels are emitted as-is (bi-grams alone under-represent
    short areas); longer labels contribute their stopword-filtered
    bigrams. Weight is the number of distinct researchers contributing the
    item. An optional positive list restricts which labels contribute.
    """
    allowed: set[str] | None = None
    if positive_list is not None:
        allowed = {normalize_label(label) for label in positive_list}
    stopwords = all_stopwords()
    contributors: dict[str | tuple[str, str], set[ResearcherId]] = {}
    for rid, areas in snapshot.researcher_areas.items():
        for norm in {a.normalized_label for a in areas}:
            if allowed is not None and norm not in allowed:
                continue
            tokens = tokenize(norm)
            if not tokens:
                continue
            items: list[str | tuple[str, str]]
            if len(tokens) == 1:
                items = [tokens[0].text]
            else:
                items = [(bg.first, bg.second) for bg in bigrams(tokens, stopwords)]
            for item in items:
                contributors.setdefault(item, set()).add(rid)
    weighted = [(item, len(rids)) for item, rids in contributors.items()]
    weighted.sort(key=lambda entry: (-entry[1], wordcloud_item_text(entry[0])))
    return weighted


def _snapshot_payload(snapshot: IndexSnapshot) -> dict:
    return {
        "postings": {
            term: [[p.doc, p.field, p.term_frequency] for p in plist]
            for term, plist in snapshot.postings.items()
        },
        "doc_lengths": _nest_doc_lengths(snapshot.doc_lengths),
        "avg_field_lengths": dict(snapshot.avg_field_lengths),
        "doc_count": snapshot.doc_count,
        "researcher_docs": {rid: list(docs) for rid, docs in snapshot.researcher_docs.items()},
        "researcher_areas": {
            rid: [[a.label, a.source.value, a.confidence] for a in areas]
            for rid, areas in snapshot.researcher_areas.items()
        },
        "doc_areas": {doc: list(labels) for doc, labels in snapshot.doc_areas.items()},
        "build_timestamp": snapshot.build_timestamp,
    }


def _nest_doc_lengths(doc_lengths: Mapping[tuple[PublicationId, str], int]) -> dict:
    nested: dict[str, dict[str, int]] = {}
    for (doc, field_name), length in doc_lengths.items():
        nested.setdefault(doc, {})[field_name] = length
    return nested


def save_snapshot(snapshot: IndexSnapshot, path: str | Path) -> None:
    payload = json.dumps(
        _snapshot_payload(snapshot), ensure_ascii=False, sort_keys=True, separators=(",", ":")
    )
    Path(path).write_bytes(SNAPSHOT_MAGIC + b"\n" + payload.encode("utf-8") + b"\n")


def load_snapshot(path: str | Path) -> IndexSnapshot:
    data = Path(path).read_bytes()
    magic, _, rest = data.partition(b"\n")
    if magic != SNAPSHOT_MAGIC:
        raise SnapshotVersionError(
            f"snapshot version tag {magic[:16]!r} does not match {SNAPSHOT_MAGIC!r}"
        )
    raw = json.loads(rest.decode("utf-8"))
    snapshot = IndexSnapshot(
        postings=MappingProxyType(
            {
                term: tuple(Posting(PublicationId(doc), field_name, tf) for doc, field_name, tf in plist)
                for term, plist in raw["postings"].items()
            }
        ),
        doc_lengths=MappingProxyType(
            {
                (PublicationId(doc), field_name): length
                for doc, by_field in raw["doc_lengths"].items()
                for field_name, length in by_field.items()
            }
        ),
        avg_field_lengths=MappingProxyType(dict(raw["avg_field_lengths"])),
        doc_count=raw["doc_count"],
        researcher_docs=MappingProxyType(
            {
                ResearcherId(rid): tuple(PublicationId(d) for d in docs)
                for rid, docs in raw["researcher_docs"].items()
            }
        ),
        researcher_areas=MappingProxyType(
            {
                ResearcherId(rid): tuple(
                    AreaAssignment(label, AreaSource(source), confidence)
                    for label, source, confidence in areas
                )
                for rid, areas in raw["researcher_areas"].items()
            }
        ),
        doc_areas=MappingProxyType(
            {PublicationId(doc): tuple(labels) for doc, labels in raw["doc_areas"].items()}
        ),
        build_timestamp=raw["build_timestamp"],
    )
    snapshot.validate()
    return snapshot
