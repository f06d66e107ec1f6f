from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from h4poly.branching import (
    a4_gamma_symmetric,
    branch,
    branch_a4_to_a3,
    check_a3_split,
    h3_mirror_symmetric,
    h3_shell_identity,
    verify_coset_reps,
)
from h4poly.golden import GoldenScalar, parse_scalar


def _terms(table):
    return {(tuple(a.to_literal() for a in t.weight),
             None if t.height is None else t.height.to_literal()): (t.multiplicity, t.size) for t in table.terms}


def test_coset_representatives():
    assert verify_coset_reps("h3") and verify_coset_reps("a4")


def test_600_cell_under_h3():
    table = branch("0,0,0,1", "h3")
    assert table.conserved()
    sizes = sorted(t.size * t.multiplicity for t in table.terms)
    assert sum(sizes) == 120
    heights = [abs(float(t.height)) for t in table.terms]
    assert heights == sorted(heights, reverse=True)
    assert h3_shell_identity(table) and h3_mirror_symmetric(table)


def test_600_cell_h3_layers():
    table = branch("0,0,0,1", "h3")
    got = [(t.label(), t.size) for t in table.terms]
    assert got == [
        ("(0,0,0)(1)", 1), ("(0,0,0)(-1)", 1),
        ("(0,0,1)(1/2*t)", 12), ("(0,0,1)(-1/2*t)", 12),
        ("(1,0,0)(1/2)", 20), ("(1,0,0)(-1/2)", 20),
        ("(0,0,t)(-1/2 + 1/2*t)", 12), ("(0,0,t)(1/2 - 1/2*t)", 12),
        ("(0,1,0)(0)", 30),
    ]


@pytest.mark.parametrize("text", ["0,0,0,1", "1,0,0,0", "0,1,0,0", "1,0,0,1"])
def test_h3_conservation_and_symmetry(text):
    table = branch(text, "h3")
    assert table.conserved()
    assert h3_shell_identity(table)
    assert h3_mirror_symmetric(table)


@pytest.mark.parametrize("text", ["0,0,0,1", "1,0,0,0", "0,0,1,0"])
def test_a4_conservation_and_flip(text):
    table = branch(text, "a4")
    assert table.conserved()
    assert a4_gamma_symmetric(table)


def test_a4_branch_of_600_cell():
    table = branch("0,0,0,1", "a4")
    assert table.total() == 120
    assert all(t.height is None for t in table.terms)


def test_a3_branch_conserves():
    table = branch("0,0,0,1", "a3")
    assert table.conserved()


def test_jobs_do_not_change_result():
    assert branch("0,1,0,0", "h3", 1).to_json() == branch("0,1,0,0", "h3", 3).to_json()


def test_unknown_subgroup():
    with pytest.raises(ValueError):
        branch("0,0,0,1", "b4")


def test_a3_split_of_fundamental():
    terms = branch_a4_to_a3([1, 0, 0, 0])
    assert [h.to_literal() for _, h in terms] == ["-1", "4"]


_entries = st.tuples(st.integers(0, 3), st.integers(0, 2)).map(lambda ab: GoldenScalar(ab[0]) + ab[1] * parse_scalar("t"))


@settings(max_examples=25)
@given(st.tuples(_entries, _entries, _entries, _entries).filter(lambda w: not all(x.is_zero for x in w)))
def test_a3_split_matches_orbit(w):
    assert check_a3_split(w) == GoldenScalar(-5)
