import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from siggb.polyring import MonomialOrder, PolyRing
from siggb.sigspace import ModuleOrder
from siggb.textio import parse_poly


@pytest.fixture
def xy():
    return PolyRing(["x", "y"], MonomialOrder("grevlex"))


def polys(ring, *texts):
    return [parse_poly(t, ring) for t in texts]


def pot(ring, descending=False):
    return ModuleOrder(ring, "pot", descending)


# Acceptance bookkeeping: tests marked ``criterion(n)`` are summarized at the end
# of the session, one line per criterion, together with any logged notes.
_RANK = {"passed": 0, "skipped": 1, "xfailed": 2, "failed": 3}
_OUTCOMES: dict = {}
_NOTES: dict = {}


def note(n: int, text: str) -> None:
    _NOTES.setdefault(n, []).append(text)
    print(f"[criterion {n}] {text}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None or (rep.when != "call" and rep.passed):
        return
    status = "xfailed" if hasattr(rep, "wasxfail") else rep.outcome
    n = m.args[0]
    if _RANK[status] >= _RANK.get(_OUTCOMES.get(n), -1):
        _OUTCOMES[n] = status


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    label = {"passed": "PASS", "failed": "FAIL", "xfailed": "FAIL (expected, see notes)", "skipped": "SKIP"}
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(_OUTCOMES):
        terminalreporter.write_line(f"criterion {n:2d}: {label[_OUTCOMES[n]]}")
        for text in _NOTES.get(n, []):
            terminalreporter.write_line(f"    {text}")
