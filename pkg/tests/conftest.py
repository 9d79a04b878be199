import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.failed):
        _criteria.append((marker.args[0], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    grouped: dict[str, list[str]] = {}
    for label, status in _criteria:
        grouped.setdefault(label, []).append(status)
    for label, statuses in grouped.items():
        passed = statuses.count("PASS")
        status = "PASS" if passed == len(statuses) else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  ({passed}/{len(statuses)} checks)")
