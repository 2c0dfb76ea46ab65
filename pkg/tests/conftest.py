"""Reports one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_RESULTS: dict[int, tuple[str, str, float, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title, limit = marker.args
    if report.when == "setup" and report.passed:
        return
    status = "PASS" if report.passed else "FAIL"
    _RESULTS[number] = (status, title, report.duration, limit)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, seconds, limit = _RESULTS[number]
        terminalreporter.write_line(
            f"{status} criterion {number:2d}: {title} ({seconds:.1f}s, limit {limit:g}s)")
