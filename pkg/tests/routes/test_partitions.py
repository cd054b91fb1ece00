"""Tests for the bijection route."""


def test_132_forward(client):
    response = client.post("/bijections/132-forward", json={"perm": "65723148"})
    assert response.status_code == 200
    assert response.json()["partition"] == "5+4+4+1+1"


def test_1324_round_trip(client):
    forward = client.post("/bijections/1324-forward", json={"perm": "21354"}).json()
    assert (forward["lam"], forward["mu"]) == ("1", "1")
    inverse = client.post(
        "/bijections/1324-inverse", json={"lam": forward["lam"], "mu": forward["mu"], "n": 5}
    ).json()
    assert inverse["perm"] == "21354"


def test_precondition_errors(client):
    response = client.post("/bijections/1324-forward", json={"perm": "1324"})
    assert response.status_code == 422
    assert response.json()["error"] == 20010
    response = client.post("/bijections/1324-forward", json={"perm": "4321"})
    assert response.status_code == 422
    assert response.json()["error"] == 20020


def test_unknown_bijection(client):
    assert client.post("/bijections/nope", json={"perm": "1"}).status_code == 400
