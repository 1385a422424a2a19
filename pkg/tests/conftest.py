"""Shared fixtures: the bundled corpus run once through the real pipeline."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from expertsearch import cli
from expertsearch.index import IndexSnapshot, load_snapshot
from expertsearch.store import CorpusStore

from .oracle_corpus import OracleCorpus, build_oracle_corpus, norm_title_key

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES = REPO_ROOT / "fixtures"
GOLDENS = Path(__file__).resolve().parent / "goldens"


def run_cli(*argv: str) -> int:
    return cli.run(list(argv))


def run_pipeline(data_dir: Path) -> None:
    steps = [
        ("ingest-roster", str(FIXTURES / "roster.csv"), "--profiles", str(FIXTURES / "profiles.json")),
        ("ingest-pubs", str(FIXTURES / "publications.jsonl")),
        ("classify",),
        ("build-index",),
    ]
    for step in steps:
        code = run_cli("--data-dir", str(data_dir), *step)
        assert code == 0, f"pipeline step {step[0]} failed"


@pytest.fixture(scope="session")
def pipeline_dir(tmp_path_factory) -> Path:
    data_dir = tmp_path_factory.mktemp("pipeline")
    run_pipeline(data_dir)
    return data_dir


@pytest.fixture(scope="session")
def fixture_store(pipeline_dir: Path) -> CorpusStore:
    return CorpusStore.load(pipeline_dir)


@pytest.fixture(scope="session")
def fixture_snapshot(pipeline_dir: Path) -> IndexSnapshot:
    return load_snapshot(pipeline_dir / "snapshot.risidx")


@pytest.fixture(scope="session")
def oracle_corpus() -> OracleCorpus:
    return build_oracle_corpus()


@pytest.fixture(scope="session")
def doc_key_by_id(fixture_store: CorpusStore) -> dict[str, str]:
    """Implementation publication id -> oracle title key."""
    return {
        pid: norm_title_key(pub.title, pub.year) for pid, pub in fixture_store.publications.items()
    }


def load_golden(name: str):
    return json.loads((GOLDENS / name).read_text("utf-8"))
