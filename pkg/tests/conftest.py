"""Shared pytest wiring.

test_acceptance.py emits one verdict line per numbered check; they are
collected here and replayed in a terminal-summary block so every
PASS/FAIL is visible in one place even when the individual test output
is folded away.
"""

import pytest

_VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def verdict():
    """Callable recording (and echoing) one acceptance verdict line."""

    def _record(line: str) -> None:
        _VERDICTS.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance verdicts")
    for line in _VERDICTS:
        terminalreporter.write_line(line)
