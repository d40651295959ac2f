from __future__ import annotations

import pytest

_acceptance_results: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with a one-line summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        label = marker.args[0]
        previous = _acceptance_results.get(item.nodeid, ("", "PASS"))[1]
        status = "PASS" if report.passed and previous == "PASS" else "FAIL"
        _acceptance_results[item.nodeid] = (label, status)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_acceptance_results.values()):
        terminalreporter.write_line(f"{status}  {label}")
