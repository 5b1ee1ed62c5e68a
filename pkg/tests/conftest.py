import re
import time
from functools import lru_cache

import pytest

from gqkit.constructions import classical_gq, regular_hyperoval, t2_star
from gqkit.symmetry import induced_collineations


@lru_cache(maxsize=None)
def geometry(name):
    if name == "GQ35":
        return t2_star(regular_hyperoval(4))
    tag, q = re.fullmatch(r"(\w+?)\((\d+)\)", name).groups()
    return classical_gq(tag, int(q))


@lru_cache(maxsize=None)
def full_group(name):
    return induced_collineations(geometry(name))


@lru_cache(maxsize=None)
def isometry_group(name):
    return induced_collineations(geometry(name), full=False)


@pytest.fixture(scope="session")
def gq35():
    return geometry("GQ35")


@pytest.fixture(scope="session")
def gq35_group():
    return full_group("GQ35")


@pytest.fixture(scope="session")
def w32():
    return geometry("W3(2)")


@pytest.fixture(scope="session")
def w32_group():
    return full_group("W3(2)")


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    prev = _ACCEPTANCE.get(n, ("PASS", 0.0))
    ok = prev[0] == "PASS" and not report.failed
    _ACCEPTANCE[n] = ("PASS" if ok else "FAIL", prev[1] + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, dur = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status} ({dur:.2f}s)")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
