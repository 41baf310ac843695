"""Collects one pass/fail verdict per acceptance criterion and prints them at the end."""
import pytest

_verdicts: dict[str, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, summary): acceptance criterion this test decides")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        label, summary = marker.args
        prev = _verdicts.get(label, (summary, True))
        _verdicts[label] = (summary, prev[1] and report.passed)


def _order(label):
    digits = "".join(c for c in label if c.isdigit())
    return int(digits), label


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_verdicts, key=_order):
        summary, ok = _verdicts[label]
        terminalreporter.write_line(f"criterion {label:<3} {'PASS' if ok else 'FAIL'}  {summary}")
