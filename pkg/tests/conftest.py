import pytest

from octoe6.structure import get_algebra
from octoe6.subalgebras import Catalogue

# (criterion number, status, summary) collected by the acceptance tests
ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def alg():
    return get_algebra()


@pytest.fixture(scope="session")
def cat(alg):
    return Catalogue(alg)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, text in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
