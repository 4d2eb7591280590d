"""Shared test plumbing: the acceptance-criterion scoreboard."""

from __future__ import annotations

_criteria: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, label: str, passed: bool) -> None:
    _criteria[number] = (passed, label)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, label = _criteria[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {label}")
