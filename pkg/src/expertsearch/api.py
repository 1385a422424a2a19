"""HTTP JSON API over a published index snapshot.

Thin server: data-only endpoints plus optional static hosting of the
browser client. The snapshot is immutable and shared by all requests;
the definition cache is the only mutable state and is lock-protected.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import time
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Mapping, Protocol

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import index as index_mod
from .classifier import area_paper_counts
from .model import ResearcherId, normalize_label
from .store import CorpusStore

logger = logging.getLogger(__name__)

BIND_ENV = "RIS_BIND"
SNAPSHOT_ENV = "RIS_SNAPSHOT"

DEFAULT_SEARCH_LIMIT = 10
MAX_SEARCH_LIMIT = 100


@dataclass(frozen=True)
class ServiceConfig:
    snapshot_path: str
    corpus_path: str
    definition_fixture_path: str
    bind_address: str = "127.0.0.1:8080"
    cors_allowed_origin: str = "*"
    definition_cache_ttl_seconds: int = 86400
    wordcloud_positive_list: tuple[str, ...] = ()
    static_dir: str | None = None
    definition_remote_endpoint: str | None = None

    @property
    def host(self) -> str:
        return self.bind_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.bind_address.rsplit(":", 1)[1])

    def validate(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port {self.port} outside 1-65535")
        for path in (self.snapshot_path, self.corpus_path, self.definition_fixture_path):
            if not Path(path).exists():
                raise FileNotFoundError(f"configured path does not exist: {path}")
        if self.static_dir is not None and not Path(self.static_dir).is_dir():
            raise FileNotFoundError(f"static_dir does not exist: {self.static_dir}")


def load_service_config(path: str | Path, env: Mapping[str, str] = os.environ) -> ServiceConfig:
    """Read the JSON config file and apply environment overrides."""
    raw = json.loads(Path(path).read_text("utf-8"))
    cfg = ServiceConfig(
        snapshot_path=raw["snapshot_path"],
        corpus_path=raw["corpus_path"],
        definition_fixture_path=raw["definition_fixture_path"],
        bind_address=raw.get("bind_address", "127.0.0.1:8080"),
        cors_allowed_origin=raw.get("cors_allowed_origin", "*"),
        definition_cache_ttl_seconds=raw.get("definition_cache_ttl_seconds", 86400),
        wordcloud_positive_list=tuple(raw.get("wordcloud_positive_list", ())),
        static_dir=raw.get("static_dir"),
        definition_remote_endpoint=raw.get("definition_remote_endpoint"),
    )
    if BIND_ENV in env:
        cfg = replace(cfg, bind_address=env[BIND_ENV])
    if SNAPSHOT_ENV in env:
        cfg = replace(cfg, snapshot_path=env[SNAPSHOT_ENV])
    return cfg


class DefinitionProvider(Protocol):
    """Resolves a normalized term to a definition dict or None."""

    def lookup(self, term: str) -> dict | None: ...


class FixtureDefinitionProvider:
    """Definitions from a bundled JSON file keyed by normalized term."""

    def __init__(self, path: str | Path) -> None:
        raw = json.loads(Path(path).read_text("utf-8"))
        self.entries = {normalize_label(term): value for term, value in raw.items()}
        self.calls = 0

    def lookup(self, term: str) -> dict | None:
        self.calls += 1
        entry = self.entries.get(term)
        if entry is None:
            return None
        return {"summary": entry["summary"], "source_url": entry.get("source_url", "")}


class RemoteDefinitionProvider:
    """Optional encyclopedia summary endpoint, enabled via config.

    Expects GET <endpoint>?term=<term> to answer {"summary": ..., "source_url"?: ...};
    any failure or non-JSON answer is treated as a miss.
    """

    def __init__(self, endpoint: str, timeout_seconds: float = 10.0, session=None) -> None:
        import requests

        self.endpoint = endpoint
        self.timeout_seconds = timeout_seconds
        self._session = session or requests.Session()
        self.calls = 0

    def lookup(self, term: str) -> dict | None:
        self.calls += 1
        response = self._session.get(
            self.endpoint, params={"term": term}, timeout=self.timeout_seconds
        )
        response.raise_for_status()
        payload = response.json()
        summary = payload.get("summary") if isinstance(payload, dict) else None
        if not summary:
            return None
        return {"summary": summary, "source_url": payload.get("source_url", "")}


class DefinitionService:
    """TTL-cached definition lookups over a provider chain.

    Chain: in-memory cache, then the fixture file, then an optional
    remote provider. Misses are answered with found=false, never raised.
    """

    def __init__(
        self,
        providers: list[DefinitionProvider],
        ttl_seconds: int,
        time_fn: Callable[[], float] = time.time,
    ) -> None:
        self.providers = providers
        self.ttl_seconds = ttl_seconds
        self.time_fn = time_fn
        self._cache: dict[str, tuple[float, dict]] = {}
        self._lock = threading.Lock()

    def lookup(self, term: str) -> dict:
        norm = normalize_label(term)
        now = self.time_fn()
        with self._lock:
            hit = self._cache.get(norm)
            if hit is not None and hit[0] > now:
                return hit[1]
        result: dict = {"term": term, "found": False, "summary": "", "source_url": "", "fetched_at": _iso(now)}
        for provider in self.providers:
            try:
                entry = provider.lookup(norm)
            except Exception as exc:  # remote failures degrade to not_found
                logger.warning("definition provider failed for %r: %s", term, exc)
                continue
            if entry is not None:
                result = {
                    "term": term,
                    "found": True,
                    "summary": entry["summary"],
                    "source_url": entry.get("source_url", ""),
                    "fetched_at": _iso(now),
                }
                break
        with self._lock:
            self._cache[norm] = (now + self.ttl_seconds, result)
        return result


def _iso(epoch: float) -> str:
    return datetime.fromtimestamp(epoch, tz=timezone.utc).isoformat()


@dataclass
class AppState:
    config: ServiceConfig
    snapshot: index_mod.IndexSnapshot | None = None
    store: CorpusStore | None = None
    definitions: DefinitionService | None = None
    ranking: index_mod.RankingConfig = field(default_factory=index_mod.RankingConfig)

    def load(self) -> None:
        self.snapshot = index_mod.load_snapshot(self.config.snapshot_path)
        self.store = CorpusStore.load(Path(self.config.corpus_path))
        providers: list[DefinitionProvider] = [
            FixtureDefinitionProvider(self.config.definition_fixture_path)
        ]
        if self.config.definition_remote_endpoint:
            providers.append(RemoteDefinitionProvider(self.config.definition_remote_endpoint))
        self.definitions = DefinitionService(providers, self.config.definition_cache_ttl_seconds)

    @property
    def loaded(self) -> bool:
        return self.snapshot is not None and self.store is not None


def _error(status_code: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status_code)


def create_app(config: ServiceConfig, defer_load: bool = False) -> FastAPI:
    """Build the service; `defer_load` leaves the snapshot unloaded (503s)."""
    state = AppState(config)
    if not defer_load:
        config.validate()
        state.load()

    app = FastAPI(title="expertsearch", openapi_url=None)
    app.state.app_state = state
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[config.cors_allowed_origin],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def on_unhandled(request: Request, exc: Exception) -> JSONResponse:
        logger.exception("request failed: %s", exc)
        return _error(500, "internal error")

    @app.get("/healthz")
    def healthz() -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        snapshot = state.snapshot
        return JSONResponse(
            {
                "status": "ok",
                "snapshot_build_timestamp": snapshot.build_timestamp,
                "doc_count": snapshot.doc_count,
                "researcher_count": len(snapshot.researcher_docs),
            }
        )

    @app.get("/api/search")
    def search(q: str | None = None, limit: str | None = None) -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        if q is None:
            return _error(400, "missing parameter q")
        parsed_limit = DEFAULT_SEARCH_LIMIT
        if limit is not None:
            try:
                parsed_limit = int(limit)
            except ValueError:
                return _error(400, "limit must be an integer")
            if not 1 <= parsed_limit <= MAX_SEARCH_LIMIT:
                return _error(400, f"limit must be in 1-{MAX_SEARCH_LIMIT}")
        snapshot = state.snapshot
        store = state.store
        experts = index_mod.rank_experts(q, snapshot, state.ranking)[:parsed_limit]
        documents = index_mod.search_documents(q, snapshot, state.ranking)[:parsed_limit]
        return JSONResponse(
            {
                "query": q,
                "experts": [_expert_json(hit, store) for hit in experts],
                "documents": [
                    {
                        "id": doc,
                        "title": store.publications[doc].title if doc in store.publications else "",
                        "score": score,
                    }
                    for doc, score in documents
                ],
            }
        )

    @app.get("/api/experts/{researcher_id}")
    def expert_profile(researcher_id: str) -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        store = state.store
        researcher = store.researchers.get(ResearcherId(researcher_id))
        if researcher is None:
            return _error(404, f"unknown researcher id {researcher_id}")
        return JSONResponse(_profile_json(researcher, store))

    @app.get("/api/fields")
    def fields_table() -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        rows = index_mod.list_research_fields(state.snapshot)
        response = JSONResponse(
            {
                "fields": [
                    {"label": label, "researcher_count": r_count, "publication_count": p_count}
                    for label, r_count, p_count in rows
                ]
            }
        )
        response.headers["Cache-Control"] = "public, max-age=3600"
        return response

    @app.get("/api/wordcloud")
    def wordcloud(positive_list: bool = False) -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        allowed = config.wordcloud_positive_list if positive_list else None
        items = index_mod.wordcloud_counts(state.snapshot, allowed)
        response = JSONResponse(
            {
                "items": [
                    {
                        "text": index_mod.wordcloud_item_text(item),
                        "kind": "label" if isinstance(item, str) else "bigram",
                        "weight": weight,
                    }
                    for item, weight in items
                ],
                "positive_list_applied": bool(positive_list),
            }
        )
        response.headers["Cache-Control"] = "public, max-age=3600"
        return response

    @app.get("/api/definition")
    def definition(term: str | None = None) -> JSONResponse:
        if not state.loaded:
            return _error(503, "snapshot not loaded")
        if term is None or not term.strip():
            return _error(400, "missing parameter term")
        return JSONResponse(state.definitions.lookup(term))

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app


def _expert_json(hit: index_mod.ExpertHit, store: CorpusStore) -> dict:
    researcher = store.researchers.get(hit.researcher)
    return {
        "researcher": hit.researcher,
        "name": researcher.stub.full_name if researcher else "",
        "department": researcher.stub.department if researcher else "",
        "score": hit.score,
        "matched_areas": list(hit.matched_areas),
        "top_documents": [{"id": doc, "score": score} for doc, score in hit.top_documents],
        "explanation": hit.explanation,
    }


def _profile_json(researcher, store: CorpusStore) -> dict:
    """Full profile; the roster phone number is deliberately never exposed."""
    paper_counts = area_paper_counts(researcher, store.publications)
    merged: dict[str, dict] = {}
    for area in researcher.areas:
        slot = merged.setdefault(
            area.normalized_label,
            {"label": area.label, "sources": [], "paper_count": paper_counts.get(area.normalized_label, 0)},
        )
        slot["sources"].append({"source": area.source.value, "confidence": area.confidence})
    publications = []
    for pid in sorted(researcher.publication_ids):
        pub = store.publications.get(pid)
        if pub is None:
            continue
        publications.append(
            {
                "id": pub.id,
                "title": pub.title,
                "year": pub.year,
                "source_url": pub.source_url,
                "language": pub.language.value,
            }
        )
    profile = researcher.profile
    citation_series = (
        [[year, count] for year, count in profile.citation_counts_by_year] if profile else []
    )
    external_links = sorted(
        {pub["source_url"] for pub in publications if pub["source_url"]}
    )
    return {
        "id": researcher.id,
        "name": researcher.stub.full_name,
        "department": researcher.stub.department,
        "institution": researcher.stub.institution,
        "email": researcher.stub.email,
        "areas": [merged[norm] for norm in sorted(merged)],
        "publications": publications,
        "citation_counts_by_year": citation_series,
        "scholar_profile": (
            {
                "display_name": profile.display_name,
                "affiliation": profile.affiliation,
                "stated_areas": list(profile.stated_areas),
            }
            if profile
            else None
        ),
        "external_links": external_links,
    }


def serve(config: ServiceConfig) -> None:
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
