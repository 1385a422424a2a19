"""Roster and publication importers, scholar-profile matching, and the
file-backed profile fetcher that stands in for live crawling."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Protocol, Sequence

from .docproc import clean_text, detect_language
from .model import (
    Publication,
    PublicationRef,
    Researcher,
    ResearcherId,
    ResearcherStub,
    ScholarProfileRecord,
    normalize_person_name,
    normalize_simple,
    publication_id,
)
from .store import CorpusStore, UnknownResearcherError

ROSTER_COLUMNS = ("name", "department", "email", "phone", "institution")
OPTIONAL_ROSTER_COLUMNS = ("areas",)

#: Accepted matches below this score are flagged for manual review.
REVIEW_SCORE = 0.9
NEEDS_REVIEW = "needs_review"

#: Guards threshold comparisons against float summation noise (0.6+0.3 != 0.9).
SCORE_EPSILON = 1e-9


class RosterFormatError(ValueError):
    """The roster input is malformed beyond row-level recovery."""


@dataclass(frozen=True)
class RosterRowError:
    row: int
    message: str


@dataclass
class ParsedRoster:
    stubs: list[ResearcherStub] = field(default_factory=list)
    errors: list[RosterRowError] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class MatchConfig:
    threshold: float = 0.7
    name_weight: float = 0.6
    affiliation_weight: float = 0.3
    email_weight: float = 0.4


@dataclass
class MatchDecision:
    stub: ResearcherStub
    candidate: ScholarProfileRecord | None
    score: float
    accepted: bool
    reasons: list[str]

    @property
    def needs_review(self) -> bool:
        return NEEDS_REVIEW in self.reasons


@dataclass
class IngestionStats:
    researchers_seen: int = 0
    profiles_matched: int = 0
    publications_seen: int = 0
    publications_deduplicated: int = 0
    bodies_present: int = 0
    errors: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "researchers_seen": self.researchers_seen,
            "profiles_matched": self.profiles_matched,
            "publications_seen": self.publications_seen,
            "publications_deduplicated": self.publications_deduplicated,
            "bodies_present": self.bodies_present,
            "errors": list(self.errors),
        }


def _split_areas(raw: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in raw.split(";") if part.strip())


def _build_stub(
    name: str, department: str, email: str, phone: str, institution: str, areas: tuple[str, ...]
) -> ResearcherStub:
    return ResearcherStub(
        full_name=name.strip(),
        department=department.strip(),
        institution=institution.strip(),
        email=email.strip(),
        phone=phone.strip(),
        website_areas=areas,
    )


def parse_roster(data: bytes, fmt: str) -> ParsedRoster:
    """Parse a roster byte stream (csv or json) into researcher stubs.

    Rows with an empty name or an invalid email are rejected and reported
    with their row number; duplicate (normalized name, department) pairs
    are reported as warnings but kept. A malformed header or undecodable
    stream raises RosterFormatError.
    """
    if fmt == "csv":
        result = _parse_roster_csv(data)
    elif fmt == "json":
        result = _parse_roster_json(data)
    else:
        raise RosterFormatError(f"unsupported roster format {fmt!r}")
    seen: set[tuple[str, str]] = set()
    for stub in result.stubs:
        key = (normalize_person_name(stub.full_name), stub.department.strip().lower())
        if key in seen:
            result.warnings.append(f"duplicate roster entry: {stub.full_name} / {stub.department}")
        seen.add(key)
    return result


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise RosterFormatError(f"roster is not valid UTF-8: {exc}") from exc


def _parse_roster_csv(data: bytes) -> ParsedRoster:
    reader = csv.reader(io.StringIO(_decode(data)))
    try:
        header = next(reader)
    except StopIteration:
        raise RosterFormatError("roster CSV is empty") from None
    header = [col.strip().lower() for col in header]
    if tuple(header[: len(ROSTER_COLUMNS)]) != ROSTER_COLUMNS or any(
        col not in OPTIONAL_ROSTER_COLUMNS for col in header[len(ROSTER_COLUMNS) :]
    ):
        raise RosterFormatError(
            f"roster CSV header must be {','.join(ROSTER_COLUMNS)} (optional: areas), got {','.join(header)}"
        )
    result = ParsedRoster()
    for row_number, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            result.errors.append(
                RosterRowError(row_number, f"expected {len(header)} columns, got {len(row)}")
            )
            continue
        record = dict(zip(header, row))
        _append_stub(result, row_number, record)
    return result


def _parse_roster_json(data: bytes) -> ParsedRoster:
    try:
        raw = json.loads(_decode(data))
    except json.JSONDecodeError as exc:
        raise RosterFormatError(f"roster JSON is malformed: {exc}") from exc
    if not isinstance(raw, list):
        raise RosterFormatError("roster JSON must be an array of objects")
    result = ParsedRoster()
    for index, item in enumerate(raw):
        row_number = index + 1
        if not isinstance(item, dict):
            result.errors.append(RosterRowError(row_number, "entry is not an object"))
            continue
        missing = [col for col in ROSTER_COLUMNS if col not in item]
        if missing:
            result.errors.append(RosterRowError(row_number, f"missing keys: {', '.join(missing)}"))
            continue
        record = {col: str(item[col]) for col in ROSTER_COLUMNS}
        areas = item.get("areas", [])
        if isinstance(areas, str):
            record["areas"] = areas
        else:
            record["areas"] = ";".join(str(a) for a in areas)
        _append_stub(result, row_number, record)
    return result


def _append_stub(result: ParsedRoster, row_number: int, record: dict) -> None:
    if not record.get("name", "").strip():
        result.errors.append(RosterRowError(row_number, "empty name"))
        return
    try:
        stub = _build_stub(
            record["name"],
            record.get("department", ""),
            record.get("email", ""),
            record.get("phone", ""),
            record.get("institution", ""),
            _split_areas(record.get("areas", "")),
        )
    except ValueError as exc:
        result.errors.append(RosterRowError(row_number, str(exc)))
        return
    result.stubs.append(stub)


def _score_candidate(
    stub: ResearcherStub, candidate: ScholarProfileRecord, cfg: MatchConfig
) -> tuple[float, list[str]]:
    score = 0.0
    reasons: list[str] = []
    if normalize_person_name(stub.full_name) == normalize_person_name(candidate.display_name):
        score += cfg.name_weight
        reasons.append(f"name match (+{cfg.name_weight})")
    institution = normalize_simple(stub.institution)
    if institution and institution in normalize_simple(candidate.affiliation):
        score += cfg.affiliation_weight
        reasons.append(f"institution in affiliation (+{cfg.affiliation_weight})")
    if stub.email_domain and stub.email_domain == candidate.verified_email_domain.lower():
        score += cfg.email_weight
        reasons.append(f"email domain match (+{cfg.email_weight})")
    return min(1.0, score), reasons


def match_scholar_profile(
    stub: ResearcherStub,
    candidates: Sequence[ScholarProfileRecord],
    cfg: MatchConfig = MatchConfig(),
) -> MatchDecision:
    """Pick the best-scoring candidate profile for a roster stub.

    score = min(1.0, name + affiliation + email components); ties go to
    the candidate with more publication refs, then lexicographic display
    name. An empty candidate list yields a non-accepted zero decision.
    """
    if not candidates:
        return MatchDecision(stub, None, 0.0, False, ["no candidates"])
    ranked = sorted(
        (
            (*_score_candidate(stub, candidate, cfg), candidate)
            for candidate in candidates
        ),
        key=lambda item: (-item[0], -len(item[2].publication_refs), item[2].display_name),
    )
    score, reasons, best = ranked[0]
    accepted = score >= cfg.threshold - SCORE_EPSILON
    if not reasons:
        reasons = ["no component matched"]
    if accepted and score < REVIEW_SCORE - SCORE_EPSILON:
        reasons.append(NEEDS_REVIEW)
    return MatchDecision(stub, best, score, accepted, reasons)


class ProfileFetcher(Protocol):
    """Source of scholar-profile candidates for a roster stub."""

    polite_delay_seconds: float

    def fetch(self, stub: ResearcherStub) -> list[ScholarProfileRecord]: ...


class FileProfileFetcher:
    """Offline fetcher backed by a JSON fixture file (the bundled default).

    Pre-filters the pool to plausible name matches: identical normalized
    full name or identical surname token.
    """

    polite_delay_seconds = 0.0

    def __init__(self, source: str | Path | Sequence[ScholarProfileRecord]):
        if isinstance(source, (str, Path)):
            raw = json.loads(Path(source).read_text("utf-8"))
            self.pool = [profile_record_from_dict(item) for item in raw]
        else:
            self.pool = list(source)

    def fetch(self, stub: ResearcherStub) -> list[ScholarProfileRecord]:
        stub_name = normalize_person_name(stub.full_name)
        stub_surname = stub_name.split()[-1] if stub_name else ""
        out = []
        for candidate in self.pool:
            name = normalize_person_name(candidate.display_name)
            if name == stub_name or (stub_surname and name.split()[-1] == stub_surname):
                out.append(candidate)
        return out


@dataclass
class FetchOutcome:
    stub: ResearcherStub
    candidates: list[ScholarProfileRecord]
    error: str | None = None


def fetch_profiles(
    stubs: Iterable[ResearcherStub],
    fetcher: ProfileFetcher,
    sleep: Callable[[float], None] = time.sleep,
) -> list[FetchOutcome]:
    """Fetch candidate profiles per stub; failures never abort the batch.

    The fetcher's polite delay is honored between consecutive calls.
    """
    outcomes: list[FetchOutcome] = []
    for stub in stubs:
        if outcomes and fetcher.polite_delay_seconds > 0:
            sleep(fetcher.polite_delay_seconds)
        try:
            outcomes.append(FetchOutcome(stub, fetcher.fetch(stub)))
        except Exception as exc:  # fetcher I/O failure: record, continue
            outcomes.append(FetchOutcome(stub, [], error=str(exc)))
    return outcomes


def profile_record_from_dict(raw: dict) -> ScholarProfileRecord:
    return ScholarProfileRecord(
        display_name=raw["display_name"],
        affiliation=raw.get("affiliation", ""),
        verified_email_domain=raw.get("verified_email_domain", ""),
        stated_areas=tuple(raw.get("stated_areas", ())),
        citation_counts_by_year=tuple(
            (int(year), int(count))
            for year, count in sorted(raw.get("citation_counts_by_year", {}).items())
        ),
        publication_refs=tuple(
            PublicationRef(ref["title"], ref.get("year")) for ref in raw.get("publication_refs", ())
        ),
        co_authors=tuple(raw.get("co_authors", ())),
    )


@dataclass(frozen=True)
class PublicationRecord:
    """One publication import row (JSONL: owner_id, title, authors[], year?, source_url?, body_text?)."""

    owner_id: ResearcherId
    title: str
    authors: tuple[str, ...] = ()
    year: int | None = None
    source_url: str | None = None
    body_text: str = ""

    @classmethod
    def from_json_line(cls, line: str) -> "PublicationRecord":
        raw = json.loads(line)
        return cls(
            owner_id=ResearcherId(raw["owner_id"]),
            title=raw["title"],
            authors=tuple(raw.get("authors", ())),
            year=raw.get("year"),
            source_url=raw.get("source_url"),
            body_text=raw.get("body_text", "") or "",
        )


def ingest_publications(records: Iterable[PublicationRecord], store: CorpusStore) -> IngestionStats:
    """Import publication records, merging duplicates by dedup key.

    Merging unions author lists, keeps the first non-empty body, and
    attaches every owner. Re-ingesting an identical batch is a no-op.
    Unknown owner ids are recorded per record and the batch continues.
    """
    stats = IngestionStats()
    for record in records:
        try:
            owner = store.require_researcher(record.owner_id)
        except UnknownResearcherError:
            stats.errors.append(f"unknown researcher id {record.owner_id} for {record.title!r}")
            continue
        try:
            pid = publication_id(record.title, record.year)
        except ValueError as exc:
            stats.errors.append(str(exc))
            continue
        stats.publications_seen += 1
        if record.body_text.strip():
            stats.bodies_present += 1
        body = clean_text(record.body_text) if record.body_text else ""
        existing = store.publications.get(pid)
        if existing is None:
            pub_language = detect_language(body if body else record.title)
            store.publications[pid] = Publication(
                id=pid,
                title=record.title,
                authors=list(record.authors),
                year=record.year,
                source_url=record.source_url,
                body_text=body,
                language=pub_language,
            )
        else:
            stats.publications_deduplicated += 1
            for author in record.authors:
                if author not in existing.authors:
                    existing.authors.append(author)
            if not existing.body_text and body:
                existing.body_text = body
                existing.language = detect_language(body)
            if existing.source_url is None and record.source_url:
                existing.source_url = record.source_url
        store.attach_owner(pid, owner.id)
    return stats
