"""
Test cases for the HTTP API endpoints.
Run with: pytest pascaldet/test_api.py -v
"""

from unittest.mock import patch

import pytest
from fastapi.testclient import TestClient

from pascaldet.api import app
from pascaldet.config import Settings

PASCAL = {"family": "pascal_shifted", "s": 1, "t": 1}


@pytest.fixture
def client():
    """Create a test client for the FastAPI app."""
    return TestClient(app)


@pytest.fixture
def small_settings():
    """Settings with a tight order limit."""
    return Settings(max_order=3)


class TestHealthCheck:
    """Test health check endpoint."""

    def test_root_endpoint(self, client):
        """Test that root endpoint returns a message."""
        response = client.get("/")
        assert response.status_code == 200
        assert "message" in response.json()


class TestDetSeq:
    """Test the determinant sequence endpoint."""

    def test_det_seq(self, client):
        response = client.post("/det-seq", json={"spec": PASCAL, "n_max": 3})
        assert response.status_code == 200
        assert response.json()["values"] == [[1, "2"], [2, "3"], [3, "4"]]

    def test_condensation_engine(self, client):
        response = client.post("/det-seq", json={"spec": PASCAL, "n_max": 3, "engine": "condensation"})
        assert response.status_code == 200
        assert response.json()["values"][2] == [3, "4"]

    def test_order_limit(self, client, small_settings):
        """Test that requests above the configured order are rejected."""
        with patch("pascaldet.api.settings", small_settings):
            response = client.post("/det-seq", json={"spec": PASCAL, "n_max": 4})
        assert response.status_code == 400
        assert "maximum" in response.json()["detail"]

    def test_invalid_spec(self, client):
        response = client.post("/det-seq", json={"spec": {"family": "nope"}, "n_max": 3})
        assert response.status_code == 400
        assert "Invalid matrix spec" in response.json()["detail"]

    def test_missing_field(self, client):
        response = client.post("/det-seq", json={"spec": PASCAL})
        assert response.status_code == 422


class TestDetect:
    """Test the detection endpoint."""

    def test_values(self, client):
        response = client.post("/detect", json={"values": ["1", "1", "2", "3", "5", "8"], "d_max": 2})
        body = response.json()
        assert response.status_code == 200
        assert body["status"] == "found"
        assert body["report"]["coeffs"] == ["1", "1"]

    def test_spec(self, client):
        response = client.post("/detect", json={"spec": PASCAL, "n_max": 8, "d_max": 2})
        assert response.status_code == 200
        assert response.json()["report"]["coeffs"] == ["2", "-1"]

    def test_open_instance(self, client):
        response = client.post("/detect", json={"values": ["1", "1", "2", "3", "5"], "d_max": 1})
        assert response.status_code == 200
        assert response.json()["status"] == "open"

    def test_too_few_values(self, client):
        response = client.post("/detect", json={"values": ["1", "2"], "d_max": 2})
        assert response.status_code == 400

    def test_needs_exactly_one_source(self, client):
        response = client.post("/detect", json={"values": ["1"], "spec": PASCAL, "n_max": 3})
        assert response.status_code == 422


class TestVerify:
    """Test the verification endpoint."""

    def test_oracle(self, client):
        response = client.post("/verify", json={"oracle": "power_distance", "params": {"a": "2"}, "n_max": 4})
        assert response.status_code == 200
        assert response.json()["holds"] is True

    def test_identity(self, client):
        response = client.post("/verify", json={"identity": "factorial_hankel", "params": {"k": 1}, "n_max": 4})
        assert response.status_code == 200
        assert response.json()["checked"] == [1, 2, 3, 4]

    def test_unknown_identity(self, client):
        response = client.post("/verify", json={"identity": "nope", "n_max": 2})
        assert response.status_code == 400

    def test_reversed_range(self, client):
        response = client.post("/verify", json={"oracle": "power_distance", "params": {"a": "2"},
                                                "n_min": 3, "n_max": 2})
        assert response.status_code == 422


class TestTrees:
    """Test the tree and sympletric endpoints."""

    def test_tree(self, client):
        response = client.get("/tree", params={"depth": 3})
        assert response.status_code == 200
        assert len(response.json()["rows"]) == 2

    def test_tree_depth_limit(self, client):
        response = client.get("/tree", params={"depth": 9})
        assert response.status_code == 400

    def test_tree_bad_sign(self, client):
        response = client.get("/tree", params={"depth": 3, "root_sign": 5})
        assert response.status_code == 400

    def test_sympletric_prefix(self, client):
        response = client.post("/sympletric", json={"prefix": [0, 1, 1]})
        assert response.status_code == 200
        assert response.json()["extensions"] == [2, 0]

    def test_sympletric_explore(self, client):
        response = client.post("/sympletric", json={"explore": 4})
        assert response.status_code == 200
        assert response.json()["rows"][0]["extensions"] == [5, 3]

    def test_sympletric_bad_prefix(self, client):
        response = client.post("/sympletric", json={"prefix": [0, 1, 2]})
        assert response.status_code == 400


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
