"""Research-area assignment: deterministic taxonomy classifier, optional
remote-LLM plugin, and the three-source area merge."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Protocol, Sequence

import requests

from .docproc import token_texts
from .model import (
    AreaAssignment,
    AreaSource,
    MANUAL_SOURCES,
    Publication,
    Researcher,
    normalize_label,
)

logger = logging.getLogger(__name__)

LLM_ENDPOINT_ENV = "RIS_LLM_ENDPOINT"
LLM_KEY_ENV = "RIS_LLM_KEY"

REMOTE_CONFIDENCE = 0.5

_SOURCE_ORDER = {
    AreaSource.INSTITUTION_WEBSITE: 0,
    AreaSource.SCHOLAR_PROFILE: 1,
    AreaSource.DOCUMENT_CLASSIFIER: 2,
}


class RemoteClassifierError(Exception):
    """Network, credential, or response-parse failure of the remote classifier."""


@dataclass(frozen=True)
class TaxonomyEntry:
    label: str
    keywords: tuple[str, ...]
    parent: str | None = None


@dataclass(frozen=True)
class Taxonomy:
    entries: tuple[TaxonomyEntry, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for entry in self.entries:
            norm = normalize_label(entry.label)
            if not norm:
                raise ValueError("taxonomy label must be non-empty")
            if norm in seen:
                raise ValueError(f"duplicate taxonomy label: {entry.label!r}")
            seen.add(norm)
            if not entry.keywords:
                raise ValueError(f"taxonomy entry {entry.label!r} has no keywords")
            for keyword in entry.keywords:
                n_tokens = len(token_texts(keyword))
                if not 1 <= n_tokens <= 3:
                    raise ValueError(
                        f"keyword {keyword!r} of {entry.label!r} must span 1-3 tokens"
                    )
        for entry in self.entries:
            if entry.parent is not None and normalize_label(entry.parent) not in seen:
                raise ValueError(f"unresolved parent {entry.parent!r} of {entry.label!r}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(entry.label for entry in self.entries)

    def normalized_labels(self) -> dict[str, str]:
        return {normalize_label(entry.label): entry.label for entry in self.entries}


def load_taxonomy(path: str | Path) -> Taxonomy:
    raw = json.loads(Path(path).read_text("utf-8"))
    return _taxonomy_from_raw(raw)


def default_taxonomy() -> Taxonomy:
    raw = json.loads(resources.files("expertsearch.data").joinpath("taxonomy.json").read_text("utf-8"))
    return _taxonomy_from_raw(raw)


def _taxonomy_from_raw(raw: object) -> Taxonomy:
    if not isinstance(raw, list):
        raise ValueError("taxonomy file must hold a JSON array")
    entries = tuple(
        TaxonomyEntry(
            label=item["label"],
            keywords=tuple(item["keywords"]),
            parent=item.get("parent"),
        )
        for item in raw
    )
    return Taxonomy(entries)


@dataclass(frozen=True)
class ClassifierConfig:
    top_k: int = 3
    min_confidence: float = 0.15
    # Title hits weigh three times body hits; titles are the strongest topical signal.
    title_weight: int = 3
    # Confidence squash raw/(raw + pivot): smooth, bounded in [0, 1), monotone.
    confidence_pivot: float = 10.0
    remote_char_budget: int = 12000

    def __post_init__(self) -> None:
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")
        if not 0.0 <= self.min_confidence <= 1.0:
            raise ValueError("min_confidence must be in [0, 1]")


def _count_sequence(haystack: Sequence[str], needle: Sequence[str]) -> int:
    n = len(needle)
    if n == 0 or n > len(haystack):
        return 0
    target = tuple(needle)
    return sum(1 for i in range(len(haystack) - n + 1) if tuple(haystack[i : i + n]) == target)


def classify_document(
    pub: Publication, taxonomy: Taxonomy, cfg: ClassifierConfig = ClassifierConfig()
) -> list[AreaAssignment]:
    """Keyword-count classification against the taxonomy.

    Per entry, raw score sums title keyword occurrences (weighted) and
    body occurrences; confidence is raw/(raw + pivot). Returns the top_k
    entries at or above min_confidence, ties broken by label.
    """
    if not taxonomy.entries:
        raise ValueError("taxonomy must not be empty")
    title_tokens = token_texts(pub.title)
    body_tokens = token_texts(pub.body_text)
    if not title_tokens and not body_tokens:
        return []
    scored: list[tuple[float, str, TaxonomyEntry]] = []
    for entry in taxonomy.entries:
        raw = 0
        for keyword in entry.keywords:
            keyword_tokens = token_texts(keyword)
            raw += _count_sequence(title_tokens, keyword_tokens) * cfg.title_weight
            raw += _count_sequence(body_tokens, keyword_tokens)
        if raw <= 0:
            continue
        confidence = raw / (raw + cfg.confidence_pivot)
        if confidence >= cfg.min_confidence:
            scored.append((confidence, normalize_label(entry.label), entry))
    scored.sort(key=lambda item: (-item[0], item[1]))
    return [
        AreaAssignment(entry.label, AreaSource.DOCUMENT_CLASSIFIER, confidence)
        for confidence, _, entry in scored[: cfg.top_k]
    ]


class RemoteClassifier(Protocol):
    """Transport for a remote label-assignment service."""

    def labels_for(self, prompt: str) -> list[str]: ...


PROMPT_TEMPLATE = (
    "Assign up to three research areas to the publication below. "
    "Answer with a JSON array of labels chosen ONLY from this list:\n{labels}\n\n"
    "Title: {title}\n\nText:\n{text}"
)


def build_prompt(pub: Publication, taxonomy: Taxonomy, cfg: ClassifierConfig) -> str:
    return PROMPT_TEMPLATE.format(
        labels="; ".join(taxonomy.labels),
        title=pub.title,
        text=pub.body_text[: cfg.remote_char_budget],
    )


class HttpRemoteClassifier:
    """JSON-over-HTTP remote classifier.

    Endpoint and credential come from the RIS_LLM_ENDPOINT / RIS_LLM_KEY
    environment variables. Request body: {"prompt": ...}; expected
    response body: {"labels": [...]}.
    """

    def __init__(
        self,
        endpoint: str | None = None,
        api_key: str | None = None,
        timeout_seconds: float = 30.0,
        session: requests.Session | None = None,
    ) -> None:
        self.endpoint = endpoint or os.environ.get(LLM_ENDPOINT_ENV, "")
        self.api_key = api_key if api_key is not None else os.environ.get(LLM_KEY_ENV, "")
        self.timeout_seconds = timeout_seconds
        self._session = session or requests.Session()
        if not self.endpoint:
            raise RemoteClassifierError(f"{LLM_ENDPOINT_ENV} is not configured")

    def labels_for(self, prompt: str) -> list[str]:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        try:
            response = self._session.post(
                self.endpoint, json={"prompt": prompt}, headers=headers, timeout=self.timeout_seconds
            )
            response.raise_for_status()
            payload = response.json()
        except (requests.RequestException, ValueError) as exc:
            raise RemoteClassifierError(f"remote classifier call failed: {exc}") from exc
        labels = payload.get("labels") if isinstance(payload, dict) else None
        if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
            raise RemoteClassifierError("remote classifier response lacks a 'labels' string array")
        return labels


def classify_remote(
    pub: Publication,
    taxonomy: Taxonomy,
    client: RemoteClassifier,
    cfg: ClassifierConfig = ClassifierConfig(),
) -> list[AreaAssignment]:
    """Remote classification; labels outside the taxonomy are dropped with a warning."""
    if not taxonomy.entries:
        raise ValueError("taxonomy must not be empty")
    raw_labels = client.labels_for(build_prompt(pub, taxonomy, cfg))
    known = taxonomy.normalized_labels()
    assignments: list[AreaAssignment] = []
    seen: set[str] = set()
    for raw in raw_labels:
        norm = normalize_label(raw)
        if norm in seen:
            continue
        if norm not in known:
            logger.warning("dropping off-taxonomy label %r for %s", raw, pub.id)
            continue
        seen.add(norm)
        assignments.append(AreaAssignment(known[norm], AreaSource.DOCUMENT_CLASSIFIER, REMOTE_CONFIDENCE))
    return assignments


def classify_with_fallback(
    pub: Publication,
    taxonomy: Taxonomy,
    cfg: ClassifierConfig = ClassifierConfig(),
    client: RemoteClassifier | None = None,
) -> list[AreaAssignment]:
    """Remote classification when a client is given, deterministic fallback otherwise."""
    if client is not None:
        try:
            return classify_remote(pub, taxonomy, client, cfg)
        except RemoteClassifierError as exc:
            logger.warning("remote classification failed for %s, falling back: %s", pub.id, exc)
    return classify_document(pub, taxonomy, cfg)


def merge_areas(
    website: Iterable[str],
    scholar: Iterable[str],
    classified: Iterable[AreaAssignment],
) -> list[AreaAssignment]:
    """Merge area labels from the three provenance sources.

    Union keyed by normalized label; one assignment per (label, source)
    pair survives so provenance is preserved. Manual sources carry
    confidence 1.0; the display form of a label is its first-seen
    spelling. Output is sorted by label, then source.
    """
    display: dict[str, str] = {}
    sources: dict[str, dict[AreaSource, float]] = {}

    def add(label: str, source: AreaSource, confidence: float) -> None:
        norm = normalize_label(label)
        if not norm:
            return
        if source in MANUAL_SOURCES:
            confidence = 1.0
        display.setdefault(norm, label)
        per_source = sources.setdefault(norm, {})
        if confidence > per_source.get(source, -1.0):
            per_source[source] = confidence

    for label in website:
        add(label, AreaSource.INSTITUTION_WEBSITE, 1.0)
    for label in scholar:
        add(label, AreaSource.SCHOLAR_PROFILE, 1.0)
    for assignment in classified:
        add(assignment.label, assignment.source, assignment.confidence)

    merged: list[AreaAssignment] = []
    for norm in sorted(sources):
        for source in sorted(sources[norm], key=_SOURCE_ORDER.__getitem__):
            merged.append(AreaAssignment(display[norm], source, sources[norm][source]))
    return merged


def area_paper_counts(
    researcher: Researcher, publications: Mapping[str, Publication]
) -> dict[str, int]:
    """Per-label count of the researcher's publications labeled by the classifier."""
    counts: dict[str, int] = {}
    for pub_id in researcher.publication_ids:
        pub = publications.get(pub_id)
        if pub is None:
            continue
        labels = {
            a.normalized_label
            for a in pub.area_assignments
            if a.source == AreaSource.DOCUMENT_CLASSIFIER
        }
        for label in labels:
            counts[label] = counts.get(label, 0) + 1
    return dict(sorted(counts.items()))
