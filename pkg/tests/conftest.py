import pytest

from toricnash.detvar import detvar_generators
from toricnash.semigroup import AffineSemigroup


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def cusp():
    return AffineSemigroup(1, ((2,), (3,)), label="cusp")


@pytest.fixture
def m2():
    def make(m, n):
        return detvar_generators(m, n).semigroup()
    return make


_outcomes = {}


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _outcomes.get(item_marker, "PASS")
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        _outcomes[item_marker] = status


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
