import pathlib
from functools import lru_cache

import pytest
from hypothesis import settings

from newtmod.bundled import BUNDLED, bundled_algebra
from newtmod.enumerate import build_pool

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@lru_cache(maxsize=None)
def pool_for(name: str):
    """Pool at the default bound, shared across the test session."""
    return build_pool(bundled_algebra(name), BUNDLED[name])


@pytest.fixture(scope="session")
def pi_a2():
    return bundled_algebra("pi_a2")


@pytest.fixture(scope="session")
def a2():
    return bundled_algebra("a2")


@pytest.fixture(scope="session")
def a3():
    return bundled_algebra("a3")


@pytest.fixture(scope="session")
def loop_x2():
    return bundled_algebra("loop_x2")


@pytest.fixture(scope="session")
def semisimple2():
    return bundled_algebra("semisimple2")


@pytest.fixture(params=sorted(BUNDLED))
def bundled_name(request):
    return request.param


# -- acceptance summary: one line per criterion ----------------------------------

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "ran": False})
    if call.when == "call":
        entry["ran"] = True
    if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")
