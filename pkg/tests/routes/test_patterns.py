"""Tests for the pattern counting routes."""

from src.service.app_state import get_app_state


def test_count(client):
    response = client.get("/patterns/1324/count", params={"n": 6})
    assert response.status_code == 200
    assert response.json() == {"schema": 1, "pattern": "1324", "n": 6, "count": 513}


def test_count_length_zero(client):
    assert client.get("/patterns/132/count", params={"n": 0}).json()["count"] == 1
    assert client.get("/patterns/-/count", params={"n": 0}).json()["count"] == 0


def test_triangle(client):
    response = client.get("/patterns/132/triangle", params={"nmax": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["rows"][3] == [1, 1, 2, 3, 3, 3, 1]
    assert body["k_max"] is None


def test_triangle_truncated(client):
    body = client.get("/patterns/1324/triangle", params={"nmax": 6, "kmax": 3}).json()
    assert body["k_max"] == 3
    assert body["rows"][-1] == [1, 2, 5, 10]


def test_triangle_is_cached(client):
    client.get("/patterns/1324/triangle", params={"nmax": 5})
    client.get("/patterns/1324/count", params={"n": 5})
    state = client.app.state._permkit_state
    assert state.triangle_cache.size() == 1


def test_column(client):
    body = client.get("/patterns/132/column", params={"k": 2, "nmax": 6}).json()
    assert body["values"] == [0, 0, 2, 2, 2, 2]


def test_mahonian(client):
    assert client.get("/mahonian", params={"n": 4, "k": 3}).json()["count"] == 6
    assert client.get("/mahonian", params={"n": 4, "k": 7}).json()["count"] == 0


def test_limit_exceeded(client):
    response = client.get("/patterns/1324/triangle", params={"nmax": 11})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == 10010
    assert "nmax must be at most 10" in body["message"]


def test_malformed_pattern(client):
    response = client.get("/patterns/1224/count", params={"n": 3})
    assert response.status_code == 400
    assert response.json()["error_type"] == "Invalid input"


def test_request_validation(client):
    response = client.get("/patterns/132/count", params={"n": -1})
    assert response.status_code == 400
    assert response.json()["error"] == 50010


def test_app_state_dependency(client):
    class _Request:
        app = client.app

    assert get_app_state(_Request()).settings.api_max_nmax == 10


def test_mahonian_length_cap(client):
    assert client.get("/mahonian", params={"n": 60, "k": 0}).json()["count"] == 1
    response = client.get("/mahonian", params={"n": 61, "k": 0})
    assert response.status_code == 400
    assert response.json()["error"] == 50010
