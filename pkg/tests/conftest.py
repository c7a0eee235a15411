"""Prints one pass/fail line per acceptance criterion after the run."""

import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        _ACCEPTANCE[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    try:
        from test_acceptance import DETAILS
    except ImportError:
        DETAILS = {}
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        outcome = _ACCEPTANCE[num]
        tag = "PASS" if outcome == "passed" else "FAIL"
        detail = DETAILS.get(num, "no detail recorded")
        tr.write_line(f"[{tag}] criterion {num}: {detail}")
