from functools import lru_cache

import pytest

from symspace.root_space import root_system
from symspace.spaces import SUPPORTED_SPACES, parse_space


@lru_cache(maxsize=None)
def algebra(space):
    return parse_space(space).build()


@lru_cache(maxsize=None)
def roots_of(space):
    return root_system(algebra(space), seed=0)


@pytest.fixture(params=SUPPORTED_SPACES)
def space(request):
    return request.param


# -- acceptance summary --------------------------------------------------------
# Tests marked ``@pytest.mark.criterion(n, "text")`` are grouped by n; a
# criterion passes when every test carrying its marker passed.

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    number, text = marker.args
    entry = _criteria.setdefault(number, {"text": text, "passed": 0, "failed": 0})
    entry["passed" if report.passed else "failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["failed"] == 0 else "FAIL"
        total = e["passed"] + e["failed"]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  ({e['passed']}/{total} cases)  {e['text']}")
