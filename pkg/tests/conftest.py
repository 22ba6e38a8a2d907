"""Prints one pass/fail line per acceptance criterion after the run."""

from __future__ import annotations

_descriptions: dict[str, str] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance" in item.nodeid and item.function.__doc__:
            _descriptions[item.nodeid] = item.function.__doc__.strip().splitlines()[0]


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid in _descriptions:
        _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_outcomes):
        tag = "PASS" if _outcomes[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {_descriptions[nodeid]}")
