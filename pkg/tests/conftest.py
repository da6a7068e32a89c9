import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from cyclic_hcs.constructor import construct
from cyclic_hcs.zmod import Params

sys.path.insert(0, str(Path(__file__).parent))

# valid trails are drawn by rejection, which can trip the filtering checks
settings.register_profile(
    "hcs", suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow]
)
settings.load_profile("hcs")

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        previous = _criteria.get(number, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
        _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


def supported_sweep(limit: int = 20):
    """Every constructible (m, n) with even m, n <= limit."""
    out = []
    for m in range(2, limit + 1, 2):
        for n in range(2, limit + 1, 2):
            outcome = construct(Params(m, n))
            if outcome:
                out.append(outcome.design)
    return out


@pytest.fixture(scope="session")
def sweep():
    return supported_sweep()
