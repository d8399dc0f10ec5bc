import json
import os
from unittest import mock

import pytest

from rankmet.code import RankCode
from rankmet.config import RunConfig
from rankmet.gf import build_field
from rankmet.minimal import construct_scattered_633


@pytest.fixture(autouse=True)
def mock_budget():
    with mock.patch.dict(os.environ, {"RANKMET_BUDGET": "10000000"}):
        yield


@pytest.fixture
def f4():
    return build_field(2, 1, 2, (1, 1, 1))


@pytest.fixture
def f8():
    """F_8 = F_2[α] with α^3 + α + 1 = 0."""
    return build_field(2, 1, 3, (1, 1, 0, 1))


@pytest.fixture
def f16():
    return build_field(2, 1, 4, (1, 1, 0, 0, 1))


@pytest.fixture
def sample_code(f8):
    """The [4,2,1]_{8/2} code generated by (1,0,0,0) and (0,1,α,α^2)."""
    return RankCode(f8, [[1, 0, 0, 0], [0, 1, 2, 4]])


@pytest.fixture
def simplex_code(f4):
    """The [4,2,2]_{4/2} simplex code (I | αI)."""
    return RankCode(f4, [[1, 0, 2, 0], [0, 1, 0, 2]])


@pytest.fixture
def write_json(tmp_path):
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return write


@pytest.fixture
def sample_file(write_json, sample_code):
    return write_json("sample.json", sample_code.to_json())


@pytest.fixture
def run_config():
    return RunConfig(budget=10_000_000)


@pytest.fixture(scope="session")
def scattered_633():
    return construct_scattered_633()
