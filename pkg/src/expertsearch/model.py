"""Canonical domain types, identifiers, and normalization rules.

Everything else in the package builds on these value types. They are
immutable where practical and deliberately free of I/O; serialization
lives in `store` and `api`.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import NewType

ResearcherId = NewType("ResearcherId", str)
PublicationId = NewType("PublicationId", str)

_WHITESPACE_RE = re.compile(r"\s+")
# Punctuation for title normalization: anything that is neither a word
# character nor whitespace, plus the underscore (which \w would keep).
_PUNCT_RE = re.compile(r"[^\w\s]+|_+")


class AreaSource(str, Enum):
    """Provenance of a research-area label."""

    INSTITUTION_WEBSITE = "institution_website"
    SCHOLAR_PROFILE = "scholar_profile"
    DOCUMENT_CLASSIFIER = "document_classifier"


#: Sources whose labels are human-supplied and therefore carry confidence 1.0.
MANUAL_SOURCES = frozenset({AreaSource.INSTITUTION_WEBSITE, AreaSource.SCHOLAR_PROFILE})


class LangCode(str, Enum):
    EN = "en"
    DE = "de"
    UND = "und"


@lru_cache(maxsize=1)
def _name_rules() -> tuple[frozenset[str], tuple[str, ...], tuple[tuple[str, str], ...]]:
    raw = json.loads(
        resources.files("expertsearch.data").joinpath("name_normalization.json").read_text("utf-8")
    )
    return (
        frozenset(raw["title_tokens"]),
        tuple(raw["title_suffixes"]),
        tuple(raw["diacritics"].items()),
    )


def fold_diacritics(text: str) -> str:
    """Apply the bundled diacritic folding table (ä→ae, ö→oe, ü→ue, ß→ss)."""
    for src, dst in _name_rules()[2]:
        text = text.replace(src, dst)
    return text


def collapse_whitespace(text: str) -> str:
    return _WHITESPACE_RE.sub(" ", text).strip()


def normalize_person_name(raw: str) -> str:
    """Normalize a person name for matching.

    Lowercases, removes academic titles from the bundled title list
    (including `-ing.` suffix forms such as "dr.-ing."), folds German
    diacritics, and collapses whitespace. Idempotent.

    Raises:
        ValueError: if `raw` is empty or whitespace-only.
    """
    if not raw or not raw.strip():
        raise ValueError("person name must be non-empty")
    titles, suffixes, _ = _name_rules()
    kept = [
        tok
        for tok in raw.lower().split()
        if tok not in titles and not any(tok.endswith(suf) for suf in suffixes)
    ]
    return collapse_whitespace(fold_diacritics(" ".join(kept)))


def normalize_simple(text: str) -> str:
    """Lowercase, fold diacritics, collapse whitespace. For affiliation/institution comparison."""
    return collapse_whitespace(fold_diacritics(text.lower()))


def normalize_label(label: str) -> str:
    """Normalization key for research-area labels: lowercase + collapsed whitespace."""
    return collapse_whitespace(label.lower())


def dedup_key(title: str, year: int | None) -> str:
    """Deterministic duplicate-detection key for a publication.

    Normalized title (lowercase, punctuation stripped, whitespace
    collapsed) joined with the year, "?" when the year is absent.

    Raises:
        ValueError: if the title is empty.
    """
    if not title or not title.strip():
        raise ValueError("publication title must be non-empty")
    norm = collapse_whitespace(_PUNCT_RE.sub("", title.lower()))
    return f"{norm}|{year if year is not None else '?'}"


def publication_id(title: str, year: int | None) -> PublicationId:
    """Content-derived publication id; equal ids iff equal dedup keys."""
    digest = hashlib.sha1(dedup_key(title, year).encode("utf-8")).hexdigest()[:12]
    return PublicationId(f"p-{digest}")


def researcher_id(sequence: int) -> ResearcherId:
    if sequence < 1:
        raise ValueError("researcher sequence starts at 1")
    return ResearcherId(f"r-{sequence:03d}")


@dataclass(frozen=True)
class AreaAssignment:
    """(label, provenance source, confidence) triple."""

    label: str
    source: AreaSource
    confidence: float

    def __post_init__(self) -> None:
        if not normalize_label(self.label):
            raise ValueError("area label must be non-empty after normalization")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")
        if self.source in MANUAL_SOURCES and self.confidence != 1.0:
            raise ValueError("manual sources carry confidence 1.0")

    @property
    def normalized_label(self) -> str:
        return normalize_label(self.label)


@dataclass(frozen=True)
class ResearcherStub:
    """One roster row: identity plus institution metadata.

    `website_areas` carries the research areas listed on the institution
    website (optional roster column), the first of the three provenance
    sources.
    """

    full_name: str
    department: str
    institution: str
    email: str = ""
    phone: str = ""
    website_areas: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.full_name.strip():
            raise ValueError("full_name must be non-empty")
        if self.email and self.email.count("@") != 1:
            raise ValueError(f"email {self.email!r} must contain exactly one '@'")

    @property
    def email_domain(self) -> str:
        return self.email.split("@", 1)[1].lower() if self.email else ""


@dataclass(frozen=True)
class PublicationRef:
    title: str
    year: int | None = None


@dataclass(frozen=True)
class ScholarProfileRecord:
    """Record from a scholarly profile source (offline fixture or crawler)."""

    display_name: str
    affiliation: str
    verified_email_domain: str = ""
    stated_areas: tuple[str, ...] = ()
    citation_counts_by_year: tuple[tuple[int, int], ...] = ()
    publication_refs: tuple[PublicationRef, ...] = ()
    co_authors: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        years = [year for year, _ in self.citation_counts_by_year]
        if years != sorted(set(years)):
            raise ValueError("citation years must be strictly ascending")
        if any(count < 0 for _, count in self.citation_counts_by_year):
            raise ValueError("citation counts must be non-negative")


@dataclass
class Researcher:
    id: ResearcherId
    stub: ResearcherStub
    profile: ScholarProfileRecord | None = None
    areas: list[AreaAssignment] = field(default_factory=list)
    publication_ids: list[PublicationId] = field(default_factory=list)

    def set_areas(self, areas: list[AreaAssignment]) -> None:
        seen: set[tuple[str, AreaSource]] = set()
        for area in areas:
            key = (area.normalized_label, area.source)
            if key in seen:
                raise ValueError(f"duplicate (label, source) pair: {key}")
            seen.add(key)
        self.areas = areas


@dataclass
class Publication:
    id: PublicationId
    title: str
    authors: list[str] = field(default_factory=list)
    year: int | None = None
    source_url: str | None = None
    body_text: str = ""
    language: LangCode = LangCode.UND
    area_assignments: list[AreaAssignment] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.title.strip():
            raise ValueError("publication title must be non-empty")
