"""Tests for the HTTP service."""

import pytest
from fastapi.testclient import TestClient

from hodgecalc.arrangement import builtin_family, parse_arrangement_json
from hodgecalc.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_poincare_family(client):
    resp = client.post("/poincare", json={"arrangement": {"family": "boolean:2"}})
    assert resp.status_code == 200
    body = resp.json()
    assert body["poincare"] == [1, 2, 1]
    assert body["string"] == "1 + 2*x + 1*x^2"
    assert body["n"] == 2 and body["d"] == 2


def test_poincare_explicit_equals_family(client):
    explicit = {"n": 2, "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]]}
    a = client.post("/poincare", json={"arrangement": explicit}).json()
    b = client.post("/poincare", json={"arrangement": {"family": "concurrent_lines:3"}}).json()
    assert a == b


def test_lattice_response_and_roundtrip(client):
    resp = client.post("/lattice", json={"arrangement": {"family": "concurrent_lines:3"}})
    assert resp.status_code == 200
    body = resp.json()
    assert len(body["flats"]) == 5
    assert sorted(f["codim"] for f in body["flats"]) == [0, 1, 1, 1, 2]
    assert sorted(f["mu"] for f in body["flats"]) == [-1, -1, -1, 1, 2]
    assert body["poincare"] == [1, 3, 2] and body["charpoly"] == [2, -3, 1]
    # the emitted arrangement block parses back to the canonical arrangement
    reparsed = parse_arrangement_json(body["arrangement"])
    assert reparsed == builtin_family("concurrent_lines", (3,))


def test_charpoly_and_class_and_mc(client):
    arrangement = {"arrangement": {"family": "boolean:2"}}
    assert client.post("/charpoly", json=arrangement).json()["charpoly"] == [1, -2, 1]
    body = client.post("/class", json=arrangement).json()
    assert body["eta_coefficients"] == [1, -2, 1]
    assert body["string"] == "1 - 2*eta + 1*eta^2"
    mc = client.post("/mc", json=arrangement).json()
    # t^2 (1+y)^2 = t^2 + 2 t^2 y + t^2 y^2
    assert mc["terms"] == [[1, 2, 0], [2, 2, 1], [1, 2, 2]]


def test_hodge_series_boolean_two(client):
    resp = client.post(
        "/hodge-series",
        json={"arrangement": {"family": "boolean:2"}, "ymax": 2, "jmax": 5, "pmax": 1},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["closed_form"]["string"] == "[1 - 1*t^2*y] / [(1-t)^2 (1-t*y)^2]"
    assert body["closed_form"]["factors"] == {
        "one_minus_t": 2,
        "one_minus_td_y": 0,
        "one_minus_td1_y": 2,
        "t_pow": 0,
        "y_pow": 0,
    }
    assert body["series"] == ["1 / (1-t)^2", "t*(2-t) / (1-t)^2", "t^2*(3-2*t) / (1-t)^2"]
    assert body["dims"] == [[1, 2, 3, 4, 5, 6], [0, 2, 3, 4, 5, 6]]
    assert body["latex"] == "\\frac{1-t^{2}y}{(1-t)^{2}(1-ty)^{2}}"


def test_multiplier_series_braid(client):
    resp = client.post(
        "/multiplier-series", json={"arrangement": {"family": "braid:3"}, "jmax": 5}
    )
    body = resp.json()
    assert body["series"] == "t*(2-t) / (1-t)^3"
    assert body["dims"] == [0, 2, 5, 9, 14, 20]


def test_verify_endpoints_pass(client):
    checks = [
        ("/verify/snc", {"n": 2, "d": 2, "pmax": 2, "jmax": 8}),
        ("/verify/multiplier", {"arrangement": {"family": "concurrent_lines:4"}, "jmax": 6}),
        ("/verify/pipeline", {"arrangement": {"family": "braid:3"}, "ymax": 4}),
        ("/verify/delres", {"arrangement": {"family": "concurrent_lines:3"}}),
    ]
    for path, payload in checks:
        resp = client.post(path, json=payload)
        assert resp.status_code == 200, path
        body = resp.json()
        assert body["ok"] is True, (path, body)
        assert all(c["passed"] for c in body["checks"])


def test_input_errors_are_400_with_detail(client):
    cases = [
        ("/poincare", {"arrangement": {"n": 2, "hyperplanes": [["1", "0"], ["1", "0"]]}}, "duplicate"),
        ("/poincare", {"arrangement": {"n": 2, "hyperplanes": [["1", "0", "4"]]}}, "central"),
        ("/poincare", {"arrangement": {"family": "frobnicate:3"}}, "unknown family"),
        ("/hodge-series", {"arrangement": {"n": 2, "hyperplanes": []}}, "no hyperplanes"),
        ("/verify/snc", {"n": 2, "d": 3}, "1 <= d <= n"),
    ]
    for path, payload, needle in cases:
        resp = client.post(path, json=payload)
        assert resp.status_code == 400, path
        assert needle in resp.json()["detail"]


def test_validation_errors_are_422(client):
    assert client.post("/poincare", json={"arrangement": {}}).status_code == 422
    assert client.post("/poincare", json={}).status_code == 422
    both = {"arrangement": {"family": "braid:3", "n": 2, "hyperplanes": [["1", "0"]]}}
    assert client.post("/poincare", json=both).status_code == 422


def test_flat_limit_maps_to_input_error(client):
    resp = client.post(
        "/lattice", json={"arrangement": {"family": "boolean:3"}, "max_flats": 4}
    )
    assert resp.status_code == 400
    assert "flats" in resp.json()["detail"]


def test_responses_are_deterministic(client):
    payload = {"arrangement": {"family": "generic:2,4"}, "ymax": 4, "jmax": 8, "pmax": 3}
    first = client.post("/hodge-series", json=payload)
    second = client.post("/hodge-series", json=payload)
    assert first.content == second.content
