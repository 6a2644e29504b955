from __future__ import annotations

import contextlib
import time

import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str) -> None:
        self.number, self.title = number, title
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)


@pytest.fixture
def criterion():
    """Context manager that records a PASS/FAIL line for one acceptance criterion."""

    @contextlib.contextmanager
    def _run(number: int, title: str):
        crit = _Criterion(number, title)
        start = time.perf_counter()
        ok = False
        try:
            yield crit
            ok = True
        finally:
            crit.note(f"{time.perf_counter() - start:.2f}s")
            line = (title, ok, "; ".join(crit.notes))
            _ACCEPTANCE[number] = line
            print(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({line[2]})")

    return _run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, notes = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  [{notes}]")
