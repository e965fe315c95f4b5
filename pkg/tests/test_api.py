from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from tanglekit.main import app

UNKNOT = "C[0,0; <] ; A[0,0; <]"
TREFOIL = "C[0,0; <] ; C[1,1; d>u] ; B[s2^2 s3^-1; dudu] ; A[0,2; <ud] ; A[0,0; >]"


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json() == {"message": "Tanglekit API", "docs": "/docs"}
    assert client.get("/healthz").json() == {"status": "ok"}


def test_parse(client):
    response = client.post("/parse", json={"tangle": TREFOIL})
    assert response.status_code == 200
    data = response.json()
    assert data["text"] == TREFOIL
    assert (data["components"], data["crossings"], data["alpha"]) == (1, 3, 2)
    assert [item["kind"] for item in data["items"]] == ["C", "C", "B", "A", "A"]


def test_parse_rejects_bad_input(client):
    response = client.post("/parse", json={"tangle": "C[0,0; <] ; A[0,0; >]"})
    assert response.status_code == 400
    assert "junction 0" in response.json()["detail"]


def test_simplify(client):
    response = client.post("/simplify", json={"tangle": "C[0,1; <u] ; B[s1; duu] ; A[1,0; u<]"})
    data = response.json()
    assert data["tangle"]["text"] == "E[u]"
    assert [m["move"] for m in data["trace"]] == ["T6", "T5"]


def test_invariants(client):
    data = client.post("/invariants", json={"tangle": TREFOIL, "t_variable": True}).json()
    assert data["writhe"] == 3
    assert data["bracket"]["text"] == "-A^5 - A^-3 + A^-7"
    assert data["jones"]["terms"] == [[-4, 1], [-12, 1], [-16, -1]]
    assert data["jones"]["in_t"] is not None


def test_invariants_need_a_link(client):
    assert client.post("/invariants", json={"tangle": "E[u]"}).status_code == 400


def test_sum_and_mirror(client):
    total = client.post("/sum", json={"first": TREFOIL, "second": UNKNOT}).json()
    assert total["components"] == 1
    assert total["text"].endswith("A[0,0; <]")
    mirrored = client.post("/mirror", json={"tangle": TREFOIL}).json()
    assert "B[s2^-2 s3; dudu]" in mirrored["text"]


def test_act(client):
    data = client.post("/act", json={"gt": "gt(lambda=-1; f=1)", "tangle": TREFOIL}).json()
    assert data["gt"] == "gt(lambda=-1; f=1)"
    assert data["denominator"]["text"] == UNKNOT
    assert data["numerator"]["crossings"] == 3


def test_act_rejects_even_lambda(client):
    assert client.post("/act", json={"gt": "gt(lambda=2; f=1)", "tangle": TREFOIL}).status_code == 400


def test_verify_gt(client):
    data = client.post("/verify-gt", json={"gt": "gt(lambda=1; f=x y x^-1 y^-1)"}).json()
    assert data["two_cycle"] is True
    assert data["hexagon"] is False
    assert data["is_gt"] is False


def test_equiv(client):
    data = client.post("/equiv", json={"first": UNKNOT, "second": TREFOIL}).json()
    assert data == {
        "verdict": "distinct",
        "trace": None,
        "invariant": "jones",
        "left": "1",
        "right": "A^-4 + A^-12 - A^-16",
        "explored": None,
        "budget": None,
    }


def test_equiv_budget_is_validated(client):
    response = client.post("/equiv", json={"first": UNKNOT, "second": UNKNOT, "budget": -1})
    assert response.status_code == 422


def test_two_bridge(client):
    data = client.post("/two-bridge", json={"b4": "s2^2", "plat": True}).json()
    assert data["tangle"]["components"] == 2
    assert data["is_knot"] is False
    assert data["b4"]["word"] == "s2 s3^-1"


def test_render(client):
    data = client.post("/render", json={"tangle": UNKNOT}).json()
    assert data["text"] == "  (empty)\n  .--.\n  '--'\n  (empty)\n"
