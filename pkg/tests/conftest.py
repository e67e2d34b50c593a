"""Collects acceptance-criterion verdicts and prints them after the run."""

import time
from contextlib import contextmanager

import pytest

_VERDICTS: list[tuple[str, bool, float, str]] = []


class CriterionRecorder:
    @contextmanager
    def __call__(self, label: str, description: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _VERDICTS.append((label, False, time.perf_counter() - start, description))
            print(f"{label} FAIL  {description}")
            raise
        elapsed = time.perf_counter() - start
        _VERDICTS.append((label, True, elapsed, description))
        print(f"{label} PASS  {description}  ({elapsed:.2f} s)")


@pytest.fixture
def criterion():
    return CriterionRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, description in sorted(_VERDICTS, key=lambda v: int(v[0][2:])):
        terminalreporter.write_line(f"{label} {'PASS' if ok else 'FAIL'}  {description}  ({elapsed:.2f} s)")
