import pytest
from hypothesis import HealthCheck, settings

from oligohilb.structure import build

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def P():
    return build("pure_set")


@pytest.fixture(scope="session")
def D():
    return build("dlo")


@pytest.fixture(scope="session")
def R():
    return build("rado")


@pytest.fixture(scope="session")
def V2():
    return build("vec2")


@pytest.fixture(scope="session")
def V3():
    return build("vec3")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
