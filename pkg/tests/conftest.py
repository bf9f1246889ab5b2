import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_path():
    def get(name: str) -> str:
        path = FIXTURES / name
        assert path.exists(), f"missing fixture {name}"
        return str(path)

    return get
