#!/usr/bin/env python3
"""Build the bundled fixture corpus and serve the API over it.

Convenience entry point for demos and the browser-client end-to-end
tests: runs the full pipeline into a data directory, writes a service
config, and starts the HTTP server. Run from the repo root:

    python3 scripts/serve_fixture_backend.py --port 8713 [--static-dir webui/dist]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--port", type=int, default=8713)
    parser.add_argument("--data-dir", default=str(ROOT / "data"))
    parser.add_argument("--static-dir", default=None)
    args = parser.parse_args()

    from expertsearch import cli
    from expertsearch.api import load_service_config, serve

    data_dir = Path(args.data_dir)
    steps = [
        ["ingest-roster", str(FIXTURES / "roster.csv"), "--profiles", str(FIXTURES / "profiles.json")],
        ["ingest-pubs", str(FIXTURES / "publications.jsonl")],
        ["classify"],
        ["build-index"],
    ]
    for step in steps:
        code = cli.run(["--data-dir", str(data_dir)] + step)
        if code != 0:
            sys.exit(f"pipeline step {step[0]} failed with exit code {code}")

    config = {
        "bind_address": f"127.0.0.1:{args.port}",
        "snapshot_path": str(data_dir / "snapshot.risidx"),
        "corpus_path": str(data_dir),
        "definition_fixture_path": str(FIXTURES / "definitions.json"),
        "cors_allowed_origin": "*",
        "wordcloud_positive_list": [
            "Big Data", "Information Retrieval", "Machine Learning", "Databases", "Robotics",
        ],
    }
    if args.static_dir:
        config["static_dir"] = args.static_dir
    config_path = data_dir / "service.json"
    config_path.write_text(json.dumps(config, indent=2) + "\n", "utf-8")
    print(f"wrote {config_path}", file=sys.stderr)
    serve(load_service_config(config_path))


if __name__ == "__main__":
    main()
