"""HTTP API tests via the in-process test client."""

import pytest
from fastapi.testclient import TestClient

from greyopt.api import create_app
from greyopt.session import SessionEngine
from greyopt.store import ModelStore

from .test_service import load


@pytest.fixture
def client(tmp_path):
    store = ModelStore(tmp_path)
    return TestClient(create_app(store, SessionEngine(store, store.root)))


def ingest(client, name):
    response = client.post("/models", json=load(name))
    assert response.status_code == 200
    return response.json()["handle"]


class TestModels:
    def test_ingest_and_fetch(self, client):
        handle = ingest(client, "grey_program.json")
        doc = client.get(f"/models/{handle}").json()
        assert doc["kind"] == "grey_program"
        assert doc["price"] == [[0.8, 2.8], [0.3, 1.3]]

    def test_ingest_idempotent(self, client):
        assert ingest(client, "grey_program.json") == ingest(client, "grey_program.json")

    def test_bad_document_rejected(self, client):
        response = client.post("/models", json={"kind": "grey_program"})
        assert response.status_code == 400
        assert "sense" in response.json()["error"]

    def test_inverted_interval_rejected(self, client):
        doc = load("grey_program.json")
        doc["resources"][0] = [20, 16]
        response = client.post("/models", json=doc)
        assert response.status_code == 400

    def test_missing_handle_is_404(self, client):
        assert client.get("/models/absent").status_code == 404


class TestSolve:
    def test_theta_solve(self, client):
        handle = ingest(client, "grey_program.json")
        response = client.post(f"/models/{handle}/solve", json={"theta": 0.5})
        body = response.json()
        assert body["status"] == "optimal"
        assert body["point"] == pytest.approx([6, 0], abs=1e-9)
        assert body["value"] == pytest.approx(10.8, abs=1e-9)

    def test_positioned_solve(self, client):
        handle = ingest(client, "grey_program.json")
        response = client.post(
            f"/models/{handle}/solve", json={"rho": 1, "beta": 1, "delta": 0}
        )
        assert response.json()["value"] == pytest.approx(28, abs=1e-9)

    def test_vector_positions(self, client):
        handle = ingest(client, "grey_program.json")
        response = client.post(
            f"/models/{handle}/solve",
            json={"rho": [1, 1], "beta": [1, 1], "delta": [[0, 0], [0, 0]]},
        )
        assert response.json()["value"] == pytest.approx(28, abs=1e-9)

    def test_incomplete_positions_rejected(self, client):
        handle = ingest(client, "grey_program.json")
        response = client.post(f"/models/{handle}/solve", json={"rho": 0.5})
        assert response.status_code == 400


class TestAlgorithms:
    def test_algorithm1_endpoint(self, client):
        handle = ingest(client, "gmop_two_objective.json")
        response = client.post(f"/models/{handle}/algorithm1", json={"theta": 0.5})
        body = response.json()
        assert body["point"] == pytest.approx([6, 0], abs=1e-9)
        assert body["objective_values"] == pytest.approx([6, 18], abs=1e-9)

    def test_algorithm2_endpoint(self, client):
        handle = ingest(client, "gmop_two_objective.json")
        response = client.post(
            f"/models/{handle}/algorithm2",
            json={"theta": 0.5, "weights": [0.6, 0.4], "reproduce_paper_rounding": True},
        )
        body = response.json()
        assert body["satisfaction"] == pytest.approx(1.0, abs=1e-9)
        assert body["point"] == pytest.approx([34.2 / 7, 11.6 / 7], abs=1e-9)

    def test_frontier_endpoint(self, client):
        handle = ingest(client, "portfolio_small.json")
        response = client.post(
            f"/portfolios/{handle}/frontier",
            json={"theta": 0.5, "epsilons": [0, 30_000, 90_000]},
        )
        body = response.json()
        assert body["points"][0]["risk"] == pytest.approx(0, abs=1e-6)
        assert "csv" in body and body["csv"].startswith("e2,Z1,Z2,tradeoff")

    def test_wrong_kind_rejected(self, client):
        handle = ingest(client, "portfolio_small.json")
        assert client.post(f"/models/{handle}/algorithm1", json={}).status_code == 400


class TestSessions:
    def start(self, client, floor=0.4):
        handle = ingest(client, "portfolio_small.json")
        response = client.post(
            "/sessions",
            json={"model": handle, "target_floor": floor, "positioned": {"theta": 0.5}},
        )
        assert response.status_code == 200
        return response.json()

    def test_session_loop(self, client):
        session = self.start(client, floor=0.4)
        sid = session["session_id"]
        response = client.post(f"/sessions/{sid}/step", json={"risk_weight": [0.1, 0.3]})
        body = response.json()
        assert len(body["history"]) == 1
        degree = body["history"][0]["assessment"]["degree"]
        assert body["status"] == ("pleased" if degree >= 0.4 else "awaiting_lambda")
        fetched = client.get(f"/sessions/{sid}").json()
        assert fetched == body

    def test_degenerate_assessment_advisory(self, client):
        session = self.start(client, floor=0.4)
        sid = session["session_id"]
        # full risk weight zeroes the positioned objective: degree undefined
        response = client.post(f"/sessions/{sid}/step", json={"risk_weight": [1, 1]})
        assert response.status_code == 422
        assert "advisory" in response.json()

    def test_closed_session_conflict(self, client):
        session = self.start(client, floor=0.0)
        sid = session["session_id"]
        assert client.post(f"/sessions/{sid}/step", json={"risk_weight": [0.2, 0.4]}).json()[
            "status"
        ] == "pleased"
        response = client.post(f"/sessions/{sid}/step", json={"risk_weight": [0.2, 0.4]})
        assert response.status_code == 409

    def test_abandon(self, client):
        session = self.start(client)
        sid = session["session_id"]
        assert client.post(f"/sessions/{sid}/abandon").json()["status"] == "abandoned"
        response = client.post(f"/sessions/{sid}/step", json={"risk_weight": [0.2, 0.4]})
        assert response.status_code == 409

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/zzz").status_code == 404
