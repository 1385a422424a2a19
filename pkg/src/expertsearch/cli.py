"""Operator command line driving the pipeline end to end.

Each subcommand prints a single-line JSON summary to stdout and progress
to stderr, so runs are scriptable. Exit codes: 0 success, 1 input error,
2 internal error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import subprocess
import sys
from pathlib import Path

from . import api as api_mod
from . import index as index_mod
from .classifier import (
    AreaSource,
    ClassifierConfig,
    HttpRemoteClassifier,
    RemoteClassifierError,
    classify_with_fallback,
    default_taxonomy,
    load_taxonomy,
    merge_areas,
)
from .docproc import clean_text, detect_language
from .ingestion import (
    FileProfileFetcher,
    MatchConfig,
    PublicationRecord,
    RosterFormatError,
    fetch_profiles,
    ingest_publications,
    match_scholar_profile,
    parse_roster,
)
from .model import AreaAssignment, normalize_label
from .store import CorpusStore

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2

SNAPSHOT_FILE = "snapshot.risidx"


class InputError(ValueError):
    """Operator input problem: missing file, malformed roster, bad flag value."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        raise InputError(message)


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _summary(payload: dict) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True))


def _require_file(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"file not found: {path}")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="expertsearch", description=__doc__)
    parser.add_argument("--data-dir", default="data", help="pipeline data directory")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("ingest-roster", parents=[], help="import a researcher roster (CSV or JSON)")
    p.add_argument("file")
    p.add_argument("--format", choices=("csv", "json"), help="default: by file extension")
    p.add_argument("--profiles", help="scholar-profile fixture file; enables matching")
    p.add_argument("--threshold", type=float, default=MatchConfig.threshold)

    p = sub.add_parser("ingest-pubs", help="import publication records (JSONL)")
    p.add_argument("file")

    p = sub.add_parser("extract", help="run an external text extractor over a directory")
    p.add_argument("dir")
    p.add_argument("--extractor-cmd", required=True, help="command invoked as: CMD <file-path>")

    p = sub.add_parser("classify", help="classify publications and merge researcher areas")
    p.add_argument("--remote", action="store_true", help="use the remote classifier with fallback")
    p.add_argument("--taxonomy", help="taxonomy JSON file (default: bundled)")

    p = sub.add_parser("build-index", help="build and persist the index snapshot")
    p.add_argument("--out", help=f"output path (default: <data-dir>/{SNAPSHOT_FILE})")

    sub.add_parser("stats", help="print corpus and snapshot statistics")

    p = sub.add_parser("serve", help="serve the HTTP API")
    p.add_argument("--config", required=True)

    return parser


def cmd_ingest_roster(args: argparse.Namespace) -> dict:
    path = _require_file(args.file)
    fmt = args.format or ("json" if path.suffix.lower() == ".json" else "csv")
    parsed = parse_roster(path.read_bytes(), fmt)
    for error in parsed.errors:
        _progress(f"row {error.row}: {error.message}")
    for warning in parsed.warnings:
        _progress(f"warning: {warning}")

    store = CorpusStore.load(args.data_dir)
    profiles_matched = 0
    needs_review = 0
    unfetched = 0
    fetch_outcomes = {}
    if args.profiles:
        fetcher = FileProfileFetcher(_require_file(args.profiles))
        outcomes = fetch_profiles(parsed.stubs, fetcher)
        fetch_outcomes = {id(o.stub): o for o in outcomes}

    cfg = MatchConfig(threshold=args.threshold)
    for stub in parsed.stubs:
        researcher = store.upsert_researcher(stub)
        outcome = fetch_outcomes.get(id(stub))
        if outcome is not None:
            if outcome.error is not None:
                unfetched += 1
                _progress(f"unfetched {stub.full_name}: {outcome.error}")
            else:
                decision = match_scholar_profile(stub, outcome.candidates, cfg)
                if decision.accepted:
                    researcher.profile = decision.candidate
                    profiles_matched += 1
                    if decision.needs_review:
                        needs_review += 1
                        _progress(f"needs review: {stub.full_name} (score {decision.score:.2f})")
        classified = [a for a in researcher.areas if a.source == AreaSource.DOCUMENT_CLASSIFIER]
        scholar_areas = researcher.profile.stated_areas if researcher.profile else ()
        researcher.set_areas(merge_areas(stub.website_areas, scholar_areas, classified))
    store.save(args.data_dir)
    return {
        "researchers_seen": len(parsed.stubs),
        "rows_rejected": len(parsed.errors),
        "warnings": len(parsed.warnings),
        "profiles_matched": profiles_matched,
        "needs_review": needs_review,
        "unfetched": unfetched,
    }


def cmd_ingest_pubs(args: argparse.Namespace) -> dict:
    path = _require_file(args.file)
    store = CorpusStore.load(args.data_dir)
    records = []
    parse_errors = []
    for line_number, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(PublicationRecord.from_json_line(line))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            parse_errors.append(f"line {line_number}: {exc}")
    stats = ingest_publications(records, store)
    store.save(args.data_dir)
    for error in parse_errors + stats.errors:
        _progress(error)
    summary = stats.as_dict()
    summary["errors"] = len(parse_errors) + len(stats.errors)
    summary.pop("researchers_seen")
    summary.pop("profiles_matched")
    return summary


def _normalize_stem(stem: str) -> str:
    return normalize_label(stem.replace("-", " ").replace("_", " "))


def cmd_extract(args: argparse.Namespace) -> dict:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise InputError(f"directory not found: {args.dir}")
    command = shlex.split(args.extractor_cmd)
    if not command:
        raise InputError("--extractor-cmd must not be empty")
    store = CorpusStore.load(args.data_dir)
    by_title = {
        normalize_label(pub.title): pid for pid, pub in store.publications.items()
    }
    summary = {"files_seen": 0, "extracted": 0, "attached": 0, "skipped_existing_body": 0, "failures": 0}
    for file_path in sorted(p for p in directory.iterdir() if p.is_file()):
        summary["files_seen"] += 1
        try:
            result = subprocess.run(
                command + [str(file_path)], capture_output=True, text=True, check=True, timeout=120
            )
        except (subprocess.SubprocessError, OSError) as exc:
            summary["failures"] += 1
            _progress(f"extractor failed on {file_path.name}: {exc}")
            continue
        summary["extracted"] += 1
        stem = file_path.stem
        pid = stem if stem in store.publications else by_title.get(_normalize_stem(stem))
        if pid is None:
            _progress(f"no matching publication for {file_path.name}")
            continue
        pub = store.publications[pid]
        if pub.body_text:
            summary["skipped_existing_body"] += 1
            continue
        pub.body_text = clean_text(result.stdout)
        pub.language = detect_language(pub.body_text)
        summary["attached"] += 1
    store.save(args.data_dir)
    return summary


def cmd_classify(args: argparse.Namespace) -> dict:
    store = CorpusStore.load(args.data_dir)
    taxonomy = load_taxonomy(_require_file(args.taxonomy)) if args.taxonomy else default_taxonomy()
    cfg = ClassifierConfig()
    client = None
    if args.remote:
        try:
            client = HttpRemoteClassifier()
        except RemoteClassifierError as exc:
            _progress(f"remote classifier unavailable, using fallback: {exc}")
    classified_pubs = 0
    for pid in sorted(store.publications):
        pub = store.publications[pid]
        pub.area_assignments = classify_with_fallback(pub, taxonomy, cfg, client)
        if pub.area_assignments:
            classified_pubs += 1
    distinct_labels: set[str] = set()
    for rid in sorted(store.researchers):
        researcher = store.researchers[rid]
        per_label: dict[str, AreaAssignment] = {}
        for pid in sorted(researcher.publication_ids):
            pub = store.publications.get(pid)
            if pub is None:
                continue
            for assignment in pub.area_assignments:
                norm = assignment.normalized_label
                best = per_label.get(norm)
                if best is None or assignment.confidence > best.confidence:
                    per_label[norm] = assignment
        scholar_areas = researcher.profile.stated_areas if researcher.profile else ()
        researcher.set_areas(
            merge_areas(
                researcher.stub.website_areas,
                scholar_areas,
                [per_label[norm] for norm in sorted(per_label)],
            )
        )
        distinct_labels.update(a.normalized_label for a in researcher.areas)
    store.save(args.data_dir)
    return {
        "publications_classified": classified_pubs,
        "researchers_updated": len(store.researchers),
        "distinct_labels": len(distinct_labels),
        "remote": bool(client),
    }


def cmd_build_index(args: argparse.Namespace) -> dict:
    store = CorpusStore.load(args.data_dir)
    snapshot = index_mod.build_index(store)
    out = Path(args.out) if args.out else Path(args.data_dir) / SNAPSHOT_FILE
    out.parent.mkdir(parents=True, exist_ok=True)
    index_mod.save_snapshot(snapshot, out)
    return {
        "doc_count": snapshot.doc_count,
        "researchers": len(snapshot.researcher_docs),
        "distinct_terms": len(snapshot.postings),
        "build_timestamp": snapshot.build_timestamp,
        "out": str(out),
    }


def cmd_stats(args: argparse.Namespace) -> dict:
    store = CorpusStore.load(args.data_dir)
    labels = {
        a.normalized_label for r in store.researchers.values() for a in r.areas
    }
    snapshot_path = Path(args.data_dir) / SNAPSHOT_FILE
    snapshot_stats = None
    if snapshot_path.is_file():
        snapshot = index_mod.load_snapshot(snapshot_path)
        snapshot_stats = {
            "doc_count": snapshot.doc_count,
            "distinct_terms": len(snapshot.postings),
            "build_timestamp": snapshot.build_timestamp,
        }
    return {
        "researchers": len(store.researchers),
        "publications": len(store.publications),
        "bodies_present": sum(1 for p in store.publications.values() if p.body_text),
        "distinct_area_labels": len(labels),
        "snapshot": snapshot_stats,
    }


def cmd_serve(args: argparse.Namespace) -> dict:
    config = api_mod.load_service_config(_require_file(args.config))
    config.validate()
    _progress(f"serving on {config.bind_address}")
    api_mod.serve(config)
    return {"served": config.bind_address}


_COMMANDS = {
    "ingest-roster": cmd_ingest_roster,
    "ingest-pubs": cmd_ingest_pubs,
    "extract": cmd_extract,
    "classify": cmd_classify,
    "build-index": cmd_build_index,
    "stats": cmd_stats,
    "serve": cmd_serve,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_INPUT_ERROR
        summary = _COMMANDS[args.command](args)
        _summary(summary)
        return EXIT_OK
    except InputError as exc:
        _summary({"error": str(exc)})
        return EXIT_INPUT_ERROR
    except (RosterFormatError, FileNotFoundError, index_mod.SnapshotVersionError) as exc:
        _summary({"error": str(exc)})
        return EXIT_INPUT_ERROR
    except Exception as exc:  # stage failure
        _summary({"error": f"{type(exc).__name__}: {exc}"})
        return EXIT_INTERNAL_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
