import pytest
from hypothesis import HealthCheck, settings

from genusforms import Curve, QuadForm, X

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def curve1():
    return Curve(X**3 - X + 9)


@pytest.fixture(scope="session")
def curve2():
    return Curve(X**5 - X + 1)


@pytest.fixture(scope="session")
def q_fixture():
    return QuadForm(X, 6, -(X**2) + 1)
