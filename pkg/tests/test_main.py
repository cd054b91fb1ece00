"""Tests for the application factory."""

from src.main import create_application


def test_health_check(client):
    """Test the health check endpoint."""
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_application_metadata():
    app = create_application()
    assert app.title == "Permutation Pattern Toolkit"
    paths = {route.path for route in app.routes}
    assert {"/health", "/patterns/{pattern}/triangle", "/bounds/{formula}", "/checks/{name}"} <= paths

