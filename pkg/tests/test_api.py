import pytest
from fastapi.testclient import TestClient

from cfic import config
from cfic.deps import get_budget
from cfic.main import app

C4 = {"vertices": [], "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]}


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c
    app.dependency_overrides.clear()


def test_root_links_and_instance_header(client):
    resp = client.get("/api")
    assert resp.status_code == 200
    assert resp.headers["X-Instance-Id"] == config.INSTANCE_ID
    links = resp.json()["_links"]
    assert links["color"] == {"href": "/api/color", "method": "POST"}
    assert "k4plus" in links


def test_color(client):
    body = {"edges": [["v1", "v2"], ["v2", "v3"], ["v3", "v4"], ["v4", "v5"], ["v5", "v1"]], "vertices": ["x"]}
    resp = client.post("/api/color", json=body)
    assert resp.status_code == 200
    data = resp.json()
    assert data["chi"] == 5
    assert data["palette"] == 5
    assert [c["case"] for c in data["components"]] == ["class-one", "cycle-odd"]
    assert len(data["edges"]) == 5
    assert data["_links"]["verify"]["href"] == "/api/verify"


def test_verify_round_trip(client):
    colored = client.post("/api/color", json=C4).json()
    resp = client.post("/api/verify", json={"vertices": colored["vertices"], "edges": colored["edges"]})
    assert resp.status_code == 200
    assert resp.json()["ok"] is True
    assert resp.json()["incidences"] == []


def test_verify_reports_conflict(client):
    body = {"edges": [{"u": "a", "v": "b", "cu": 1, "cv": 2}, {"u": "b", "v": "c", "cu": 2, "cv": 3}]}
    data = client.post("/api/verify", json=body).json()
    assert data["ok"] is False
    assert data["witness"] in {"a", "b", "c"}
    assert data["color"] == 2
    assert len(data["incidences"]) == 2


def test_channels(client):
    body = {"edges": [{"u": "c", "v": f"l{i}", "cu": 2 * i - 1, "cv": 2 * i} for i in (1, 2, 3)]}
    data = client.post("/api/channels", json=body).json()
    assert data["rainbow"] is True
    boxes = {b["node"]: b for b in data["boxes"]}
    assert boxes["c"]["channels"] == [1, 2, 3, 4, 5, 6]
    assert boxes["l2"]["channels"] == [3, 4]


def test_chi_and_chromatic_index(client):
    assert client.post("/api/chi", json=C4).json()["chi"] == 4
    exact = client.post("/api/chi", json={**C4, "exact": True}).json()
    assert exact["chi"] == 4 and exact["method"] == "exact"
    ci = client.post("/api/chromatic-index", json=C4).json()
    assert ci["chromatic_index"] == 2 and ci["class_one"] is True


def test_classify(client):
    k4plus = client.get("/api/gen/k4plus").json()
    body = {"edges": [[e["u"], e["v"]] for e in k4plus["edges"]]}
    assert client.post("/api/classify", json=body).json()["verdict"] == "P"
    assert client.post("/api/classify", json=C4).json()["verdict"] == "other"


def test_generators(client):
    cycle = client.get("/api/gen/cycle/3").json()
    assert cycle["palette"] == 6
    complete = client.get("/api/gen/complete/6").json()
    assert complete["palette"] == 10
    assert len(complete["edges"]) == 15


def test_generator_errors(client):
    resp = client.get("/api/gen/cycle/2")
    assert resp.status_code == 422
    assert resp.json()["detail"]["error"]["code"] == "PRECONDITION_FAILED"
    resp = client.get("/api/gen/complete/100000")
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"]["code"] == "BAD_SIZE"


def test_invalid_graph(client):
    resp = client.post("/api/color", json={"edges": [["a", "a"]]})
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"]["code"] == "INVALID_GRAPH"


def test_validation_error_envelope(client):
    resp = client.post("/api/color", json={"edges": [["a b", "c"]]})
    assert resp.status_code == 422
    assert resp.json()["error"]["code"] == "VALIDATION_ERROR"


def test_disconnected_input_is_colored_per_component(client):
    body = {"edges": [["a", "b"], ["c", "d"]]}
    data = client.post("/api/color", json=body).json()
    assert data["chi"] == 2
    assert len(data["components"]) == 2


def test_budget_exhaustion(client):
    app.dependency_overrides[get_budget] = lambda: 1
    resp = client.post("/api/chi", json={**C4, "exact": True})
    assert resp.status_code == 503
    assert resp.json()["detail"]["error"]["code"] == "BUDGET_EXCEEDED"


def test_closed_form_chi_rejects_class_two_input(client):
    k5 = {"edges": [[f"v{i}", f"v{j}"] for i in range(5) for j in range(i + 1, 5)]}
    resp = client.post("/api/chi", json=k5)
    assert resp.status_code == 422
    assert resp.json()["detail"]["error"]["code"] == "NOT_CLASS_ONE"
