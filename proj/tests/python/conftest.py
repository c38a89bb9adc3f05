import os
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def cli():
    path = os.environ.get("SYNTHROUTE_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("SYNTHROUTE_CLI is not set")
    return path
