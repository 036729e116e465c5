from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from qv.arith import GroundRing
from qv.quandle import AlexanderQuandle

settings.register_profile("qv", max_examples=50, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qv")


@pytest.fixture(scope="session")
def F4() -> GroundRing:
    return GroundRing(2, (1, 1, 1))


@pytest.fixture(scope="session")
def F9() -> GroundRing:
    return GroundRing(3, (1, 0, 1))


@pytest.fixture(scope="session")
def S9() -> GroundRing:
    """F_3[w]/(w^2-w+1): order 9, not a field."""
    return GroundRing(3, (1, 2, 1))


@pytest.fixture(scope="session")
def F3() -> GroundRing:
    return GroundRing(3, (1, 1))


@pytest.fixture(scope="session")
def Q4(F4) -> AlexanderQuandle:
    return AlexanderQuandle(F4, F4.generator)


@pytest.fixture(scope="session")
def Q9(F9) -> AlexanderQuandle:
    return AlexanderQuandle(F9, F9.generator)


@pytest.fixture(scope="session")
def QS9(S9) -> AlexanderQuandle:
    return AlexanderQuandle(S9, S9.generator)


@pytest.fixture(scope="session")
def R3(F3) -> AlexanderQuandle:
    return AlexanderQuandle(F3, (2,))


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
