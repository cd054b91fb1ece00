"""Tests for the bounds route."""


def test_layered(client):
    response = client.get("/bounds/layered", params={"arg": ["1", "2", "1"]})
    assert response.status_code == 200
    body = response.json()
    assert body["value"] == 16.0
    assert body["formula"] == "layered"
    assert "bound = root^2 = 16.0" in body["derivation"]


def test_rho(client):
    body = client.get("/bounds/rho").json()
    assert abs(body["value"] - 13.00195) < 1e-4


def test_merge(client):
    assert client.get("/bounds/merge", params={"arg": ["9", "4"]}).json()["value"] == 25.0


def test_errors(client):
    response = client.get("/bounds/unknown")
    assert response.status_code == 400
    assert "Unknown formula" in response.json()["message"]
    response = client.get("/bounds/partition", params={"arg": "0"})
    assert response.status_code == 422
    assert response.json()["error"] == 20000
