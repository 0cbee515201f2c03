import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gradelift.freealg import GeneratorSet, NcPolynomial, deglex  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def xy():
    """(order, X, Y) over generators X < Y."""
    order = deglex(GeneratorSet(("X", "Y")))
    return order, NcPolynomial.monomial(order, (0,)), NcPolynomial.monomial(order, (1,))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    n, title = marker.args
    status = "PASS" if rep.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {n}: {status}  {title}")
