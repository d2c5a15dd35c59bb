"""Shared fixtures for the test suite."""

import pytest
from hypothesis import HealthCheck, settings

from src.models.graph import GraphFamily, Normalization
from src.recgraph import generate

settings.register_profile(
    "lab",
    max_examples=50,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lab")


@pytest.fixture(scope="session")
def d1():
    return generate(GraphFamily.DIAMOND, 1)


@pytest.fixture(scope="session")
def d2():
    return generate(GraphFamily.DIAMOND, 2)


@pytest.fixture(scope="session")
def d3():
    return generate(GraphFamily.DIAMOND, 3)


@pytest.fixture(scope="session")
def l1():
    return generate(GraphFamily.LAAKSO, 1)


@pytest.fixture(scope="session")
def l2():
    return generate(GraphFamily.LAAKSO, 2)


@pytest.fixture(scope="session")
def l3():
    return generate(GraphFamily.LAAKSO, 3)


@pytest.fixture(scope="session")
def m1():
    return generate(GraphFamily.M_VARIANT, 1)


@pytest.fixture(scope="session")
def d3_weighted():
    return generate(GraphFamily.DIAMOND, 3, Normalization.WEIGHTED)
