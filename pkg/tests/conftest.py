from __future__ import annotations

import pytest

from permcycle.field import field_from_order
from permcycle.ntheory import prime_power

_ACCEPTANCE: list[tuple[int, bool, str]] = []


def odd_prime_powers(limit: int) -> list[int]:
    return [q for q in range(3, limit + 1, 2) if prime_power(q) is not None]


@pytest.fixture(scope="session")
def fields_upto():
    cache: dict[int, object] = {}

    def get(limit: int):
        out = []
        for q in odd_prime_powers(limit):
            if q not in cache:
                cache[q] = field_from_order(q)
            out.append(cache[q])
        return out

    return get


@pytest.fixture
def acceptance():
    """Record one pass/fail line for an acceptance criterion."""

    def record(number: int, passed: bool, detail: str) -> None:
        _ACCEPTANCE.append((number, passed, detail))
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
