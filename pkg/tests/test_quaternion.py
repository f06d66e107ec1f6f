from __future__ import annotations

import pytest
from hypothesis import given

from conftest import scalars
from h4poly.golden import ONE, SIGMA, TAU, ZERO, GoldenScalar
from h4poly.quaternion import Quaternion, q_conj, q_dot, q_mul, q_norm, reflect
from h4poly.linalg import rank

E0, E1, E2, E3 = (Quaternion(*[1 if k == i else 0 for k in range(4)]) for i in range(4))
quats = lambda: _quat_strategy()  # noqa: E731


def _quat_strategy():
    from hypothesis import strategies as st

    return st.builds(Quaternion, scalars(), scalars(), scalars(), scalars())


def test_units():
    assert q_mul(E1, E2) == E3
    assert q_mul(E2, E3) == E1
    assert q_mul(E3, E1) == E2
    assert q_mul(E1, E1) == -E0
    assert q_mul(E2, E1) == -E3


def test_generator_b_is_unit():
    b = Quaternion(TAU / 2, SIGMA / 2, GoldenScalar(1) / 2, 0)
    assert q_norm(b) == ONE
    assert q_dot(E1, E2) == ZERO


@given(quats())
def test_conj_involution(q):
    assert q_conj(q_conj(q)) == q
    assert q_mul(E0, q) == q


@given(quats(), quats())
def test_norm_is_multiplicative(p, q):
    assert q_norm(q_mul(p, q)) == q_norm(p) * q_norm(q)
    assert q_conj(q_mul(p, q)) == q_mul(q_conj(q), q_conj(p))


@given(quats(), quats())
def test_dot_is_symmetric(p, q):
    assert q_dot(p, q) == q_dot(q, p)
    assert q_dot(p, p) == q_norm(p)


@given(quats(), quats())
def test_reflection(n, r):
    if n.is_zero:
        return
    assert reflect(n, n) == -n
    assert reflect(n, reflect(n, r)) == r
    assert q_dot(reflect(n, r), reflect(n, r)) == q_dot(r, r)


@given(quats())
def test_reflection_fixes_a_hyperplane(n):
    if n.is_zero:
        return
    basis = [E0, E1, E2, E3]
    fixed = []
    for b in basis:
        v = b - n * (q_dot(b, n) / q_norm(n))
        if not v.is_zero:
            assert reflect(n, v) == v
            fixed.append(list(v.components))
    assert rank(fixed) == 3


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        reflect(Quaternion(0), E1)


def test_json_round_trip():
    q = Quaternion(TAU, SIGMA / 3, 0, -1)
    assert Quaternion.from_json(q.to_json()) == q
