import json

import pytest

from src.algebra.quiverrep import Quiver, enumerate_reps

A2 = Quiver(2, ((1, 2),))
POINT = Quiver(1)


@pytest.fixture(scope="session")
def point_table():
    return enumerate_reps(POINT, 2, (2,))


@pytest.fixture(scope="session")
def point_table_q3():
    return enumerate_reps(POINT, 3, (2,))


@pytest.fixture(scope="session")
def a2_small():
    """A_2 over F_2 with caps (1, 1): ids 0, S1, S2, S1+S2, P"""
    return enumerate_reps(A2, 2, (1, 1))


@pytest.fixture(scope="session")
def a2_table():
    return enumerate_reps(A2, 2, (2, 2))


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write
