import json
import stat
import sys

import pytest

from expertsearch import cli
from expertsearch.index import load_snapshot
from expertsearch.store import CorpusStore

from .conftest import FIXTURES, load_golden, run_cli


def run_and_parse(capsys, *argv) -> tuple[int, dict]:
    code = run_cli(*argv)
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1, f"expected exactly one summary line, got {out!r}"
    return code, json.loads(out[0])


class TestIngestRoster:
    def test_summary_and_exit_code(self, tmp_path, capsys):
        code, summary = run_and_parse(
            capsys,
            "--data-dir", str(tmp_path),
            "ingest-roster", str(FIXTURES / "roster.csv"),
            "--profiles", str(FIXTURES / "profiles.json"),
        )
        assert code == 0
        assert summary["researchers_seen"] == 12
        assert summary["profiles_matched"] == 4
        assert summary["needs_review"] == 1
        assert summary["rows_rejected"] == 0

    def test_rerun_is_idempotent(self, tmp_path, capsys):
        for _ in range(2):
            code, _ = run_and_parse(
                capsys, "--data-dir", str(tmp_path), "ingest-roster", str(FIXTURES / "roster.csv")
            )
            assert code == 0
        store = CorpusStore.load(tmp_path)
        assert len(store.researchers) == 12

    def test_missing_file_is_input_error(self, tmp_path, capsys):
        code, summary = run_and_parse(
            capsys, "--data-dir", str(tmp_path), "ingest-roster", str(tmp_path / "nope.csv")
        )
        assert code == 1 and "error" in summary


class TestIngestPubs:
    def test_summary_counts(self, tmp_path, capsys):
        run_cli("--data-dir", str(tmp_path), "ingest-roster", str(FIXTURES / "roster.csv"))
        capsys.readouterr()
        code, summary = run_and_parse(
            capsys, "--data-dir", str(tmp_path), "ingest-pubs", str(FIXTURES / "publications.jsonl")
        )
        counts = load_golden("pipeline_counts.json")
        assert code == 0
        assert summary["publications_seen"] == counts["publication_records"]
        assert summary["publications_deduplicated"] == counts["duplicates"]
        assert summary["bodies_present"] == counts["bodies_present_records"]
        assert summary["errors"] == 0

    def test_unknown_owner_continues(self, tmp_path, capsys):
        pubs = tmp_path / "pubs.jsonl"
        pubs.write_text(
            json.dumps({"owner_id": "r-404", "title": "Orphan"}) + "\n"
            + "this is not json\n",
            "utf-8",
        )
        code, summary = run_and_parse(capsys, "--data-dir", str(tmp_path), "ingest-pubs", str(pubs))
        assert code == 0
        assert summary["errors"] == 2
        assert summary["publications_seen"] == 0


class TestExtract:
    def test_cat_extractor_attaches_bodies(self, tmp_path, capsys):
        run_cli("--data-dir", str(tmp_path), "ingest-roster", str(FIXTURES / "roster.csv"))
        pubs = tmp_path / "pubs.jsonl"
        pubs.write_text(json.dumps({"owner_id": "r-001", "title": "Stored Elsewhere", "year": 2021}) + "\n")
        run_cli("--data-dir", str(tmp_path), "ingest-pubs", str(pubs))
        docs = tmp_path / "docs"
        docs.mkdir()
        (docs / "stored-elsewhere.txt").write_text(
            "Extracted body text with a reference to mail@example.org inside.", "utf-8"
        )
        capsys.readouterr()
        code, summary = run_and_parse(
            capsys, "--data-dir", str(tmp_path), "extract", "--extractor-cmd", "cat", str(docs)
        )
        assert code == 0
        assert summary == {
            "files_seen": 1, "extracted": 1, "attached": 1, "skipped_existing_body": 0, "failures": 0,
        }
        store = CorpusStore.load(tmp_path)
        pub = next(iter(store.publications.values()))
        assert pub.body_text.startswith("Extracted body text")
        assert "@" not in pub.body_text

    def test_failing_extractor_counted(self, tmp_path, capsys):
        docs = tmp_path / "docs"
        docs.mkdir()
        (docs / "a.pdf").write_text("x")
        bad = tmp_path / "bad.sh"
        bad.write_text("#!/bin/sh\nexit 3\n")
        bad.chmod(bad.stat().st_mode | stat.S_IEXEC)
        capsys.readouterr()
        code, summary = run_and_parse(
            capsys, "--data-dir", str(tmp_path), "extract", "--extractor-cmd", str(bad), str(docs)
        )
        assert code == 0
        assert summary["failures"] == 1 and summary["attached"] == 0


class TestClassifyAndBuild:
    def test_classify_summary(self, tmp_path, capsys):
        run_cli("--data-dir", str(tmp_path), "ingest-roster", str(FIXTURES / "roster.csv"),
                "--profiles", str(FIXTURES / "profiles.json"))
        run_cli("--data-dir", str(tmp_path), "ingest-pubs", str(FIXTURES / "publications.jsonl"))
        capsys.readouterr()
        code, summary = run_and_parse(capsys, "--data-dir", str(tmp_path), "classify")
        counts = load_golden("pipeline_counts.json")
        assert code == 0
        assert summary["researchers_updated"] == counts["researchers"]
        assert summary["distinct_labels"] == counts["distinct_area_labels"]
        assert summary["remote"] is False

    def test_build_index_before_ingestion_is_valid_empty(self, tmp_path, capsys):
        code, summary = run_and_parse(capsys, "--data-dir", str(tmp_path), "build-index")
        assert code == 0
        assert summary["doc_count"] == 0
        snapshot = load_snapshot(tmp_path / "snapshot.risidx")
        assert snapshot.doc_count == 0

    def test_stats_before_any_data(self, tmp_path, capsys):
        code, summary = run_and_parse(capsys, "--data-dir", str(tmp_path), "stats")
        assert code == 0
        assert summary == {
            "researchers": 0, "publications": 0, "bodies_present": 0,
            "distinct_area_labels": 0, "snapshot": None,
        }


class TestExitCodes:
    def test_unknown_subcommand_usage_and_exit_1(self, capsys):
        code = run_cli("frobnicate")
        captured = capsys.readouterr()
        assert code == 1
        assert "usage" in captured.err.lower()

    def test_no_subcommand_exit_1(self, capsys):
        assert run_cli() == 1

    def test_internal_error_exit_2(self, tmp_path, capsys, monkeypatch):
        import expertsearch.cli as cli_mod

        def boom(args):
            raise RuntimeError("disk exploded")

        monkeypatch.setitem(cli_mod._COMMANDS, "stats", boom)
        code, summary = run_and_parse(capsys, "--data-dir", str(tmp_path), "stats")
        assert code == 2
        assert "disk exploded" in summary["error"]

    def test_progress_goes_to_stderr(self, tmp_path, capsys):
        run_cli("--data-dir", str(tmp_path), "ingest-roster", str(FIXTURES / "roster.csv"),
                "--profiles", str(FIXTURES / "profiles.json"))
        captured = capsys.readouterr()
        assert "needs review" in captured.err
        assert "needs review" not in captured.out
