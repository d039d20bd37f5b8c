import random
from fractions import Fraction

import pytest
from hypothesis import settings

from lietame.linalg import determinant

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# criterion number -> (description, outcome), filled by the report hook below
_CRITERIA: dict[int, list] = {}


def random_invertible(n: int, rng: random.Random) -> list[list[Fraction]]:
    """Random invertible rational matrix with small entries."""
    while True:
        p = [[Fraction(rng.randint(-2, 2), rng.choice((1, 1, 2, 3))) for _ in range(n)] for _ in range(n)]
        if n == 0 or determinant(p) != 0:
            return p


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    entry = _CRITERIA.setdefault(number, [text, "PASS"])
    if report.failed:
        entry[1] = "FAIL"
    elif report.skipped and report.when != "teardown" and entry[1] == "PASS":
        entry[1] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        text, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
