import json
from pathlib import Path

import pytest

from wonderful_strata.coxeter import build_system, cartan_matrix

_CACHE = {}


def system(label):
    if label not in _CACHE:
        _CACHE[label] = build_system(cartan_matrix(label))
    return _CACHE[label]


@pytest.fixture(scope="session")
def A1():
    return system("A1")


@pytest.fixture(scope="session")
def A2():
    return system("A2")


@pytest.fixture(scope="session")
def B2():
    return system("B2")


@pytest.fixture(scope="session")
def A3():
    return system("A3")


@pytest.fixture(scope="session")
def B3():
    return system("B3")


@pytest.fixture(scope="session")
def golden():
    return json.loads((Path(__file__).parent / "golden.json").read_text())
