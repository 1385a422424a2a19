"""Corpus store: researchers and deduplicated publications with
deterministic JSON persistence (researchers.json + corpus.jsonl)."""

from __future__ import annotations

import json
from pathlib import Path

from .model import (
    AreaAssignment,
    AreaSource,
    LangCode,
    Publication,
    PublicationId,
    PublicationRef,
    Researcher,
    ResearcherId,
    ResearcherStub,
    ScholarProfileRecord,
    normalize_person_name,
    researcher_id,
)

RESEARCHERS_FILE = "researchers.json"
CORPUS_FILE = "corpus.jsonl"


class UnknownResearcherError(KeyError):
    pass


class CorpusStore:
    """In-memory corpus keyed by stable ids.

    Single-writer: batch mutation is serialized by the caller; reads of a
    saved snapshot never observe a partial write because saves rewrite
    whole files.
    """

    def __init__(self) -> None:
        self.researchers: dict[ResearcherId, Researcher] = {}
        self.publications: dict[PublicationId, Publication] = {}
        self._identity_index: dict[tuple[str, str], ResearcherId] = {}

    @staticmethod
    def identity_key(stub: ResearcherStub) -> tuple[str, str]:
        return (normalize_person_name(stub.full_name), stub.department.strip().lower())

    def upsert_researcher(self, stub: ResearcherStub) -> Researcher:
        """Register a roster stub; re-ingesting an identical stub is a no-op."""
        key = self.identity_key(stub)
        existing_id = self._identity_index.get(key)
        if existing_id is not None:
            researcher = self.researchers[existing_id]
            if researcher.stub != stub:
                researcher.stub = stub
            return researcher
        rid = researcher_id(len(self.researchers) + 1)
        researcher = Researcher(id=rid, stub=stub)
        self.researchers[rid] = researcher
        self._identity_index[key] = rid
        return researcher

    def require_researcher(self, rid: ResearcherId) -> Researcher:
        try:
            return self.researchers[rid]
        except KeyError:
            raise UnknownResearcherError(f"unknown researcher id {rid}") from None

    def attach_owner(self, pub_id: PublicationId, rid: ResearcherId) -> None:
        researcher = self.require_researcher(rid)
        if pub_id not in researcher.publication_ids:
            researcher.publication_ids.append(pub_id)

    def owners_of(self, pub_id: PublicationId) -> list[ResearcherId]:
        return sorted(r.id for r in self.researchers.values() if pub_id in r.publication_ids)

    def save(self, data_dir: str | Path) -> None:
        directory = Path(data_dir)
        directory.mkdir(parents=True, exist_ok=True)
        researchers = [
            _researcher_to_dict(self.researchers[rid]) for rid in sorted(self.researchers)
        ]
        (directory / RESEARCHERS_FILE).write_text(
            json.dumps(researchers, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
            "utf-8",
        )
        lines = [
            json.dumps(_publication_to_dict(self.publications[pid]), ensure_ascii=False, sort_keys=True)
            for pid in sorted(self.publications)
        ]
        (directory / CORPUS_FILE).write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")

    @classmethod
    def load(cls, data_dir: str | Path) -> "CorpusStore":
        directory = Path(data_dir)
        store = cls()
        researchers_path = directory / RESEARCHERS_FILE
        if researchers_path.exists():
            for raw in json.loads(researchers_path.read_text("utf-8")):
                researcher = _researcher_from_dict(raw)
                store.researchers[researcher.id] = researcher
                store._identity_index[cls.identity_key(researcher.stub)] = researcher.id
        corpus_path = directory / CORPUS_FILE
        if corpus_path.exists():
            for line in corpus_path.read_text("utf-8").splitlines():
                if not line.strip():
                    continue
                pub = _publication_from_dict(json.loads(line))
                store.publications[pub.id] = pub
        return store


def _area_to_list(area: AreaAssignment) -> list:
    return [area.label, area.source.value, area.confidence]


def _area_from_list(raw: list) -> AreaAssignment:
    return AreaAssignment(raw[0], AreaSource(raw[1]), raw[2])


def _researcher_to_dict(researcher: Researcher) -> dict:
    stub = researcher.stub
    out: dict = {
        "id": researcher.id,
        "stub": {
            "full_name": stub.full_name,
            "department": stub.department,
            "institution": stub.institution,
            "email": stub.email,
            "phone": stub.phone,
            "website_areas": list(stub.website_areas),
        },
        "areas": [_area_to_list(a) for a in researcher.areas],
        "publication_ids": sorted(researcher.publication_ids),
    }
    if researcher.profile is not None:
        profile = researcher.profile
        out["profile"] = {
            "display_name": profile.display_name,
            "affiliation": profile.affiliation,
            "verified_email_domain": profile.verified_email_domain,
            "stated_areas": list(profile.stated_areas),
            "citation_counts_by_year": [list(pair) for pair in profile.citation_counts_by_year],
            "publication_refs": [[ref.title, ref.year] for ref in profile.publication_refs],
            "co_authors": list(profile.co_authors),
        }
    return out


def _researcher_from_dict(raw: dict) -> Researcher:
    stub_raw = raw["stub"]
    stub = ResearcherStub(
        full_name=stub_raw["full_name"],
        department=stub_raw["department"],
        institution=stub_raw["institution"],
        email=stub_raw.get("email", ""),
        phone=stub_raw.get("phone", ""),
        website_areas=tuple(stub_raw.get("website_areas", ())),
    )
    profile = None
    if "profile" in raw:
        p = raw["profile"]
        profile = ScholarProfileRecord(
            display_name=p["display_name"],
            affiliation=p["affiliation"],
            verified_email_domain=p.get("verified_email_domain", ""),
            stated_areas=tuple(p.get("stated_areas", ())),
            citation_counts_by_year=tuple((y, c) for y, c in p.get("citation_counts_by_year", ())),
            publication_refs=tuple(PublicationRef(t, y) for t, y in p.get("publication_refs", ())),
            co_authors=tuple(p.get("co_authors", ())),
        )
    researcher = Researcher(
        id=ResearcherId(raw["id"]),
        stub=stub,
        profile=profile,
        publication_ids=[PublicationId(p) for p in raw.get("publication_ids", [])],
    )
    researcher.set_areas([_area_from_list(a) for a in raw.get("areas", [])])
    return researcher


def _publication_to_dict(pub: Publication) -> dict:
    return {
        "id": pub.id,
        "title": pub.title,
        "authors": pub.authors,
        "year": pub.year,
        "source_url": pub.source_url,
        "body_text": pub.body_text,
        "language": pub.language.value,
        "area_assignments": [_area_to_list(a) for a in pub.area_assignments],
    }


def _publication_from_dict(raw: dict) -> Publication:
    return Publication(
        id=PublicationId(raw["id"]),
        title=raw["title"],
        authors=list(raw.get("authors", [])),
        year=raw.get("year"),
        source_url=raw.get("source_url"),
        body_text=raw.get("body_text", ""),
        language=LangCode(raw.get("language", "und")),
        area_assignments=[_area_from_list(a) for a in raw.get("area_assignments", [])],
    )
