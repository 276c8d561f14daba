"""Shared pytest plumbing.

Collects the one-line verdicts emitted by the acceptance tests and
prints them in a terminal section at the end of the run, so each
criterion's PASS/FAIL line is visible regardless of capture mode.
"""

acceptance_lines: list[str] = []


def record_acceptance_line(line: str) -> None:
    acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
