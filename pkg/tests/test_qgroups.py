from __future__ import annotations

import pytest

from h4poly.golden import ONE, SIGMA, TAU
from h4poly.qgroups import build_set, conjugacy_classes, element_order, icosian_group
from h4poly.quaternion import Quaternion


@pytest.mark.parametrize("name,size", [("T", 24), ("Tprime", 24), ("O", 48), ("I", 120), ("S", 96), ("Itilde", 120)])
def test_sizes_and_unit_norms(name, size):
    qset = build_set(name)
    assert len(qset) == size
    assert all(q.norm() == ONE for q in qset)


@pytest.mark.parametrize("name", ["T", "O", "I", "Itilde"])
def test_groups_are_closed(name):
    qset = build_set(name)
    assert qset.is_closed()
    assert Quaternion(1) in qset
    assert all(q.conj() in qset for q in qset)


def test_icosian_is_disjoint_union():
    t, s, i = (set(build_set(n)) for n in ("T", "S", "I"))
    assert i == t | s and not t & s


def test_snub_set_is_not_closed():
    assert not build_set("S").is_closed()


def test_itilde_differs_from_i():
    assert set(build_set("Itilde")) != set(build_set("I"))


def test_class_table():
    classes = conjugacy_classes(build_set("I"))
    assert [c["size"] for c in classes] == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert [c["order"] for c in classes] == [1, 2, 10, 5, 10, 5, 6, 3, 4]
    thirty = classes[-1]["members"]
    assert all(q.q0 == 0 for q in thirty)
    for k in range(1, 4):
        e = Quaternion(*[1 if j == k else 0 for j in range(4)])
        assert e in thirty and -e in thirty


def test_class_scalar_parts():
    classes = conjugacy_classes(build_set("I"))
    got = [c["representative"].q0 for c in classes]
    half = ONE / 2
    assert got == [ONE, -ONE, TAU * half, -TAU * half, SIGMA * half, -SIGMA * half, half, -half, 0 * ONE]


def test_element_order_of_generator():
    b = Quaternion(TAU / 2, SIGMA / 2, ONE / 2, 0)
    assert element_order(b) == 10


def test_indexed_table_matches_products():
    grp = icosian_group()
    n, mul, _, neg, _ = grp.tables()
    els = grp.elements
    for i in range(0, n, 7):
        for j in range(0, n, 11):
            assert els[mul[i * n + j]] == els[i] * els[j]
        assert els[neg[i]] == -els[i]
