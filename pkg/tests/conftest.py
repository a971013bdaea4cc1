"""Acceptance-gate reporting: one pass/fail line per criterion after the run."""

from __future__ import annotations

from collections import defaultdict

import pytest

CRITERIA = {
    1: "induction table verification (2 <= n <= 8, E7(a5) branch by dimension)",
    2: "negative control (A3, (2,0,2), I={2}) fails cond_iii only",
    3: "type A sl2 oracle equivalence and round trip, |lambda| <= 9",
    4: "Coxeter arithmetic: Phi_12, Phi_30, |Phi| = rank*h, F4 and 2G2 fixtures",
    5: "Brauer tree fixtures, planar orders, golden DOT, projective characters",
    6: "HLM structural properties on random series data",
    7: "parity of dim g(1) on every bundled and classical diagram",
}

_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status:7} {title} ({len(results or [])} checks)")
