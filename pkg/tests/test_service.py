"""HTTP surface and the thin command-line client over it."""

import json

import pytest
from fastapi.testclient import TestClient

from ncverify import checks, enveloping
from ncverify.cli import _expand_targets, main
from ncverify.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_check_listing(client):
    payload = client.get("/api/checks").json()
    names = [entry["name"] for entry in payload]
    assert names == sorted(checks.REGISTRY)
    by_name = {entry["name"]: entry for entry in payload}
    assert by_name["omega-image"]["modes"] == ["oracle", "symbolic"]
    assert all(entry["description"] for entry in payload)


def test_run_check_endpoint(client):
    report = client.post("/api/checks/heun-racah", json={"seed": 5}).json()
    assert report["checkName"] == "heun-racah"
    assert report["status"] == "pass"
    assert report["seed"] == 5
    assert report["timing"] is None and report["resources"] is None


def test_unknown_check_is_404(client):
    assert client.post("/api/checks/bogus", json={}).status_code == 404


def test_unknown_mode_is_400(client):
    response = client.post("/api/checks/omega-image", json={"mode": "guess"})
    assert response.status_code == 400


def test_symbolic_mode_without_budget_is_skipped(client):
    report = client.post("/api/checks/omega-image", json={"mode": "symbolic"}).json()
    assert report["status"] == "skipped"
    assert "not run" in report["witness"]


def test_trace_endpoint_matches_generator(client):
    response = client.post("/api/trace", json={"pattern": [1, 1]})
    k1 = enveloping.centraliser_generators()["k1"]
    assert response.json()["text"] == k1.to_text()


def test_trace_rejects_bad_factor(client):
    assert client.post("/api/trace", json={"pattern": [1, 3]}).status_code == 422


def test_lr_endpoint(client):
    body = {"left": [2, 1], "right": [2, 1], "target": [3, 1]}
    assert client.post("/api/lr", json=body).json()["multiplicity"] == 1
    body["target"] = [2, 1]
    assert client.post("/api/lr", json=body).json()["multiplicity"] == 0


def test_lr_rejects_nonstandard_factor(client):
    body = {"left": [9, 9], "right": [2, 1], "target": [3, 1]}
    assert client.post("/api/lr", json=body).status_code == 400


def test_cli_trace_prints_canonical_text(capsys):
    assert main(["trace", "1,1"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == enveloping.centraliser_generators()["k1"].to_text()


def test_cli_lr_prints_multiplicity(capsys):
    assert main(["lr", "2,1", "2,1", "3,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_cli_lr_bad_weight_is_usage_error():
    assert main(["lr", "9,9", "2,1", "3,1"]) == 2


def test_cli_unknown_target_is_usage_error():
    assert main(["verify", "nonsense"]) == 2


def test_cli_skipped_check_fails_run(capsys):
    assert main(["verify", "omega-image", "--mode", "symbolic"]) == 1
    assert "SKIPPED" in capsys.readouterr().out


def test_cli_json_reports_are_reproducible(capsys):
    assert main(["verify", "heun", "racah", "--json", "--seed", "2"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "heun", "racah", "--json", "--seed", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert [r["checkName"] for r in payload["reports"]] == ["heun-racah"]


def test_cli_group_target_expansion():
    assert _expand_targets(["e6"]) == sorted(
        f"e6-{s}" for s in ("group", "roots", "invariants", "theorem53", "invariance")
    )
    assert _expand_targets(["heun", "hahn"]) == ["heun-hahn"]
    assert _expand_targets([]) == sorted(checks.REGISTRY)
