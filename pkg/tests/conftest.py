import os

import pytest
from fastapi.testclient import TestClient

# Tests run sequential enumeration unless they ask for workers explicitly.
os.environ.setdefault("PERMKIT_JOBS", "1")

from src.main import create_application  # noqa: E402


@pytest.fixture
def client():
    app = create_application()
    with TestClient(app) as test_client:
        yield test_client
