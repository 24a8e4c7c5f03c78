"""Shared fixtures; collects acceptance-criterion verdicts for the summary."""

import contextlib
import time

import pytest

_LINES: dict[int, str] = {}


class CriterionRecorder:
    """Times a criterion block, prints one pass/fail line, and re-raises."""

    @contextlib.contextmanager
    def __call__(self, number: int, description: str, limit: float | None = None):
        start = time.perf_counter()
        error = None
        try:
            yield
        except BaseException as exc:  # record the verdict before propagating
            error = exc
        elapsed = time.perf_counter() - start
        on_time = limit is None or elapsed <= limit
        status = "PASS" if error is None and on_time else "FAIL"
        budget = f", limit {limit:.0f}s" if limit is not None else ""
        line = f"criterion {number}: {status} ({elapsed:.2f}s{budget}) {description}"
        _LINES[number] = line
        print(line)
        if error is not None:
            raise error
        if not on_time:
            raise AssertionError(
                f"criterion {number} exceeded its time budget: {elapsed:.2f}s > {limit}s"
            )


@pytest.fixture
def criterion():
    return CriterionRecorder()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_LINES):
            terminalreporter.write_line(_LINES[number])
