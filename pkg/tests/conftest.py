import pytest
from hypothesis import settings

from qinduce.galilei import fq_presentation, uq_algebra, uq_presentation

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fq():
    return fq_presentation()


@pytest.fixture(scope="session")
def uq():
    return uq_presentation(4)


@pytest.fixture(scope="session")
def uq_bare():
    return uq_algebra(4)


_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def record(number, title, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  ({detail})"
        _ACCEPTANCE.append((number, line))
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
