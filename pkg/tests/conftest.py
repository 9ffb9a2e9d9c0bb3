from pathlib import Path

import pytest

from fintopo.core import FiniteSpace, load_space

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture(scope="session")
def ex15() -> FiniteSpace:
    return load_space(GOLDEN / "ex15.top")


@pytest.fixture(scope="session")
def ex16() -> FiniteSpace:
    return load_space(GOLDEN / "ex16.top")


@pytest.fixture(scope="session")
def ex23() -> FiniteSpace:
    return load_space(GOLDEN / "ex23.top")


@pytest.fixture(scope="session")
def point() -> FiniteSpace:
    return load_space(GOLDEN / "point.top")


# one pass/fail line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
