"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-check detail.
"""
from __future__ import annotations

import pytest

from h4poly.verify import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"{n:02d}-{t}" for n, t, _ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number, jobs=1)
    print()
    print(result.line())
    for check in result.checks:
        print(check.line())
    failed = [c.claim for c in result.checks if c.counted and not c.ok]
    assert result.passed, f"criterion {number} fails on: {failed}"
