import json
import math

import numpy as np
import pytest
from fastapi.testclient import TestClient

from qcoords.cli import main
from qcoords.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_analyze_ghz(client):
    r = client.post("/api/analyze", json={"state_spec": "ghz"})
    assert r.status_code == 200
    doc = r.json()
    assert set(doc) == {"state", "coordinates", "residuals"}
    assert doc["coordinates"]["concurrences"]["c123"][0] == pytest.approx(1.0, abs=1e-10)
    assert all(v <= 1e-8 for v in doc["residuals"].values())


def test_analyze_basis_state(client):
    r = client.post("/api/analyze", json={"state_spec": "[1,0,0,0]"})
    assert r.status_code == 200
    c = r.json()["coordinates"]["concurrences"]["c"]
    assert abs(complex(c[0], c[1])) <= 1e-12


def test_analyze_amplitudes_body(client):
    r = client.post("/api/analyze", json={"amplitudes": [[0.6, 0.0], [0.0, 0.8]]})
    assert r.status_code == 200
    assert r.json()["coordinates"]["num_qubits"] == 1


def test_analyze_malformed(client):
    assert client.post("/api/analyze", content=b"{oops").status_code == 400
    assert client.post("/api/analyze", json={"nope": 1}).status_code == 400
    assert client.post("/api/analyze", json={"state_spec": "bogus("}).status_code == 400


def test_apply_bell_circuit(client):
    r = client.post(
        "/api/apply",
        json={"state": [[1, 0], [0, 0], [0, 0], [0, 0]], "gates": "H@1, CNOT@1:2"},
    )
    assert r.status_code == 200
    traj = r.json()["trajectory"]
    assert len(traj) == 3
    final = traj[-1]["coordinates"]["concurrences"]["c"]
    assert final[0] == pytest.approx(1.0, abs=1e-9)
    assert final[1] == pytest.approx(0.0, abs=1e-9)


def test_apply_rz_preserves_c123(client):
    amps = [[1 / math.sqrt(2), 0], [0, 0], [0, 0], [0, 0],
            [0, 0], [0, 0], [0, 0], [1 / math.sqrt(2), 0]]
    r = client.post("/api/apply", json={"state": amps, "gates": "RZ(0.5)@1"})
    assert r.status_code == 200
    traj = r.json()["trajectory"]
    for p in traj:
        c123 = p["coordinates"]["concurrences"]["c123"]
        assert abs(complex(*c123)) == pytest.approx(1.0, abs=1e-8)


def test_apply_carries_prev_coordinates(client):
    r1 = client.post("/api/analyze", json={"state_spec": "bell"})
    prev = r1.json()["coordinates"]
    r2 = client.post(
        "/api/apply",
        json={
            "state": [[1 / math.sqrt(2), 0], [0, 0], [0, 0], [1 / math.sqrt(2), 0]],
            "gates": "RZ(0.3)@1",
            "steps_per_gate": 4,
            "prev_coordinates": prev,
        },
    )
    assert r2.status_code == 200
    assert len(r2.json()["trajectory"]) == 5


def test_apply_errors(client):
    assert client.post("/api/apply", json={"state": [[1, 0], [1, 0]], "gates": "H@1"}).status_code == 400
    r = client.post("/api/apply", json={"state": [[1, 0], [0, 0]], "gates": "WAT@1"})
    assert r.status_code == 400
    assert "WAT" in r.json()["detail"]
    assert client.post("/api/apply", json={"gates": "H@1"}).status_code == 400


def test_named_registry(client):
    names = [item["name"] for item in client.get("/api/named").json()]
    for required in ("ghz", "w", "w-gsd", "bell"):
        assert required in names


def test_render_svg_matches_cli(client, tmp_path):
    r = client.get("/render.svg", params={"spec": "ghz"})
    assert r.status_code == 200
    out = tmp_path / "cli.svg"
    assert main(["analyze", "ghz", "--svg", str(out)]) == 0
    assert r.text == out.read_text()


def test_render_svg_bad_spec(client):
    assert client.get("/render.svg", params={"spec": "nonsense"}).status_code == 400
    assert client.get("/render.svg").status_code == 400


def test_cli_service_parity_bytes(client, tmp_path):
    """Coordinate JSON must be byte-identical between CLI and HTTP."""
    for spec in ("ghz", "bell(1.1)", "w", "[0.5, 0.5, 0.5, 0.5]"):
        r = client.post("/api/analyze", json={"state_spec": spec})
        out = tmp_path / "out.json"
        assert main(["analyze", spec, "--json", str(out)]) == 0
        assert out.read_text() in r.text


def test_statelessness_permutation(client):
    bodies = [{"state_spec": "ghz"}, {"state_spec": "w"}, {"state_spec": "bell"}]
    first = [client.post("/api/analyze", json=b).text for b in bodies]
    second = [client.post("/api/analyze", json=b).text for b in reversed(bodies)]
    assert first == list(reversed(second))


def test_index_serves_page(client):
    r = client.get("/")
    assert r.status_code == 200
    assert "<html" in r.text.lower()
