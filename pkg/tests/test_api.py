import json
import shutil
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from expertsearch.api import (
    DefinitionService,
    FixtureDefinitionProvider,
    ServiceConfig,
    create_app,
    load_service_config,
)

from .conftest import FIXTURES


@pytest.fixture(scope="module")
def service_config(tmp_path_factory, pipeline_dir) -> ServiceConfig:
    root = tmp_path_factory.mktemp("service")
    shutil.copy(pipeline_dir / "snapshot.risidx", root / "snapshot.risidx")
    shutil.copy(pipeline_dir / "researchers.json", root / "researchers.json")
    shutil.copy(pipeline_dir / "corpus.jsonl", root / "corpus.jsonl")
    shutil.copy(FIXTURES / "definitions.json", root / "definitions.json")
    return ServiceConfig(
        snapshot_path=str(root / "snapshot.risidx"),
        corpus_path=str(root),
        definition_fixture_path=str(root / "definitions.json"),
        bind_address="127.0.0.1:8713",
        cors_allowed_origin="https://ui.example.org",
        wordcloud_positive_list=("Big Data", "Information Retrieval", "Machine Learning", "Databases", "Robotics"),
    )


@pytest.fixture(scope="module")
def client(service_config) -> TestClient:
    return TestClient(create_app(service_config), raise_server_exceptions=False)


class TestHealth:
    def test_healthz_after_load(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        payload = response.json()
        assert payload["status"] == "ok"
        assert payload["doc_count"] == 40
        assert payload["researcher_count"] == 12
        assert payload["snapshot_build_timestamp"].startswith("content:")

    def test_healthz_before_load(self, service_config):
        deferred = TestClient(create_app(service_config, defer_load=True))
        response = deferred.get("/healthz")
        assert response.status_code == 503
        assert set(response.json()) == {"error"}


class TestSearchEndpoint:
    def test_fixture_professor_first(self, client):
        payload = client.get("/api/search", params={"q": "big data"}).json()
        assert payload["query"] == "big data"
        assert payload["experts"][0]["name"] == "Prof. Dr. Lena Hoffmann"
        assert "Big Data" in payload["experts"][0]["matched_areas"]
        assert payload["documents"][0]["title"]

    def test_unknown_term_empty_lists(self, client):
        response = client.get("/api/search", params={"q": "zzzznotaterm"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["experts"] == [] and payload["documents"] == []

    def test_missing_q_is_400(self, client):
        response = client.get("/api/search")
        assert response.status_code == 400
        assert response.json() == {"error": "missing parameter q"}

    @pytest.mark.parametrize("limit", ["0", "101", "-3", "nan"])
    def test_bad_limit_is_400(self, client, limit):
        response = client.get("/api/search", params={"q": "data", "limit": limit})
        assert response.status_code == 400
        assert set(response.json()) == {"error"}

    def test_limit_truncates(self, client):
        payload = client.get("/api/search", params={"q": "data", "limit": "2"}).json()
        assert len(payload["documents"]) <= 2 and len(payload["experts"]) <= 2

    def test_deterministic_body(self, client):
        first = client.get("/api/search", params={"q": "big data"}).content
        second = client.get("/api/search", params={"q": "big data"}).content
        assert first == second

    def test_response_time_budget(self, client):
        import time

        start = time.monotonic()
        client.get("/api/search", params={"q": "information retrieval"})
        assert time.monotonic() - start < 0.2


class TestExpertProfile:
    def test_seven_merged_areas_with_provenance(self, client):
        payload = client.get("/api/experts/r-001").json()
        assert payload["name"] == "Prof. Dr. Lena Hoffmann"
        assert len(payload["areas"]) == 7
        for area in payload["areas"]:
            assert area["sources"], area
        by_label = {a["label"].lower(): a for a in payload["areas"]}
        assert by_label["cognitive neuroscience"]["paper_count"] == 1
        assert {s["source"] for s in by_label["big data"]["sources"]} == {
            "institution_website",
            "scholar_profile",
            "document_classifier",
        }

    def test_phone_never_exposed(self, client):
        for rid in ("r-001", "r-004", "r-009"):
            response = client.get(f"/api/experts/{rid}")
            assert response.status_code == 200
            assert "phone" not in response.text
            assert "292-0" not in response.text  # fixture phone numbers

    def test_unknown_id_404(self, client):
        response = client.get("/api/experts/r-999")
        assert response.status_code == 404
        assert set(response.json()) == {"error"}

    def test_all_profiles_carry_sourced_areas(self, client, fixture_store):
        for rid in fixture_store.researchers:
            payload = client.get(f"/api/experts/{rid}").json()
            for area in payload["areas"]:
                assert len(area["sources"]) >= 1

    def test_citation_series_present_for_matched(self, client):
        payload = client.get("/api/experts/r-001").json()
        years = [year for year, _ in payload["citation_counts_by_year"]]
        assert years == sorted(years) and len(years) == 5
        assert payload["scholar_profile"]["display_name"] == "Lena Hoffmann"


class TestFieldsAndWordcloudEndpoints:
    def test_fields_table(self, client):
        response = client.get("/api/fields")
        assert response.status_code == 200
        assert response.headers["cache-control"] == "public, max-age=3600"
        rows = response.json()["fields"]
        assert rows[0]["researcher_count"] >= rows[-1]["researcher_count"]

    def test_wordcloud_plain_and_positive(self, client):
        plain = client.get("/api/wordcloud").json()
        positive = client.get("/api/wordcloud", params={"positive_list": "true"}).json()
        assert not plain["positive_list_applied"]
        assert positive["positive_list_applied"]
        assert len(positive["items"]) < len(plain["items"])
        texts = {item["text"] for item in positive["items"]}
        assert texts == {"big data", "information retrieval", "machine learning", "databases", "robotics"}

    def test_wordcloud_cache_header(self, client):
        assert client.get("/api/wordcloud").headers["cache-control"] == "public, max-age=3600"


class TestDefinitionEndpoint:
    def test_fixture_hit(self, client):
        payload = client.get("/api/definition", params={"term": "Big  Data"}).json()
        assert payload["found"] is True
        assert "volume" in payload["summary"]
        assert payload["source_url"].startswith("https://")
        assert payload["fetched_at"]

    def test_miss_is_found_false_not_error(self, client):
        response = client.get("/api/definition", params={"term": "phlogiston studies"})
        assert response.status_code == 200
        assert response.json()["found"] is False

    def test_empty_term_400(self, client):
        assert client.get("/api/definition").status_code == 400
        assert client.get("/api/definition", params={"term": "  "}).status_code == 400

    def test_cache_skips_provider_within_ttl(self):
        provider = FixtureDefinitionProvider(FIXTURES / "definitions.json")
        clock = {"now": 1000.0}
        service = DefinitionService([provider], ttl_seconds=60, time_fn=lambda: clock["now"])
        service.lookup("big data")
        assert provider.calls == 1
        first = service.lookup("big data")
        assert provider.calls == 1  # served from cache
        clock["now"] += 61
        second = service.lookup("big data")
        assert provider.calls == 2  # TTL expired
        assert first["summary"] == second["summary"]

    def test_remote_provider_chain_after_fixture_miss(self):
        from expertsearch.api import RemoteDefinitionProvider

        class FakeSession:
            def get(self, url, params=None, timeout=None):
                class FakeResponse:
                    def raise_for_status(self):
                        pass

                    def json(self):
                        return {"summary": f"remote summary for {params['term']}", "source_url": "https://enc/x"}

                return FakeResponse()

        fixture = FixtureDefinitionProvider(FIXTURES / "definitions.json")
        remote = RemoteDefinitionProvider("https://enc.example/api", session=FakeSession())
        service = DefinitionService([fixture, remote], ttl_seconds=60)
        hit = service.lookup("big data")
        assert hit["found"] and "volume" in hit["summary"]
        assert remote.calls == 0  # fixture answered first
        miss = service.lookup("obscure subject")
        assert miss["found"] and miss["summary"] == "remote summary for obscure subject"
        assert remote.calls == 1

    def test_remote_provider_failure_degrades_to_not_found(self):
        from expertsearch.api import RemoteDefinitionProvider

        class FailingSession:
            def get(self, url, params=None, timeout=None):
                raise OSError("connection refused")

        fixture = FixtureDefinitionProvider(FIXTURES / "definitions.json")
        remote = RemoteDefinitionProvider("https://enc.example/api", session=FailingSession())
        service = DefinitionService([fixture, remote], ttl_seconds=60)
        result = service.lookup("unknown thing")
        assert result["found"] is False


class TestCrossCutting:
    def test_all_json_content_type(self, client):
        for path in ("/healthz", "/api/search?q=data", "/api/fields", "/api/wordcloud",
                     "/api/definition?term=big+data", "/api/experts/r-001"):
            response = client.get(path)
            assert response.headers["content-type"].startswith("application/json"), path

    def test_error_shape_uniform(self, client):
        for path in ("/api/search", "/api/experts/r-999", "/api/definition"):
            payload = client.get(path).json()
            assert set(payload) == {"error"} and isinstance(payload["error"], str)

    def test_cors_header_for_configured_origin(self, client):
        response = client.get("/healthz", headers={"Origin": "https://ui.example.org"})
        assert response.headers["access-control-allow-origin"] == "https://ui.example.org"

    def test_concurrent_burst_consistent(self, client):
        def fetch(_):
            return client.get("/api/search", params={"q": "big data"}).content

        with ThreadPoolExecutor(max_workers=8) as pool:
            bodies = list(pool.map(fetch, range(50)))
        assert all(body == bodies[0] for body in bodies)


class TestServiceConfig:
    def test_env_overrides(self, tmp_path, service_config):
        config_file = tmp_path / "service.json"
        config_file.write_text(
            json.dumps(
                {
                    "snapshot_path": service_config.snapshot_path,
                    "corpus_path": service_config.corpus_path,
                    "definition_fixture_path": service_config.definition_fixture_path,
                    "bind_address": "127.0.0.1:9999",
                }
            )
        )
        cfg = load_service_config(config_file, env={"RIS_BIND": "0.0.0.0:8123"})
        assert cfg.bind_address == "0.0.0.0:8123"
        assert cfg.port == 8123

    def test_missing_paths_rejected(self, tmp_path):
        cfg = ServiceConfig(
            snapshot_path=str(tmp_path / "nope.risidx"),
            corpus_path=str(tmp_path),
            definition_fixture_path=str(tmp_path / "defs.json"),
        )
        with pytest.raises(FileNotFoundError):
            cfg.validate()

    def test_port_range_rejected(self, tmp_path, service_config):
        cfg = ServiceConfig(
            snapshot_path=service_config.snapshot_path,
            corpus_path=service_config.corpus_path,
            definition_fixture_path=service_config.definition_fixture_path,
            bind_address="127.0.0.1:70000",
        )
        with pytest.raises(ValueError):
            cfg.validate()
