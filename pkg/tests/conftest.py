"""Shared pytest configuration: acceptance-criterion summary."""

import pytest

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record and print a PASS/FAIL line for one acceptance criterion."""

    def record(number: int, checks: list[tuple[str, bool]], detail: str = "") -> None:
        failed = [name for name, ok in checks if not ok]
        ok = not failed
        text = detail if ok else "failed: " + "; ".join(failed)
        ACCEPTANCE_RESULTS[number] = (ok, text)
        print(f"CRITERION {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
        assert ok, f"criterion {number}: " + "; ".join(failed)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"CRITERION {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
