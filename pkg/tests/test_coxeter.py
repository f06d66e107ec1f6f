from __future__ import annotations

import random

import pytest

from h4poly.coxeter import (
    IDENTITY,
    GroupElement,
    apply,
    build_aut_a4,
    build_system,
    closed_form_group,
    compose,
    coxeter_group,
    decode,
    gamma_element,
    generate,
)
from h4poly.golden import ONE, ZERO, parse_scalar
from h4poly.linalg import identity, mat_mul
from h4poly.quaternion import Quaternion, q_dot

BASIS = [Quaternion(*[1 if k == i else 0 for k in range(4)]) for i in range(4)]


def test_h4_roots_and_weights():
    h4 = build_system("H4")
    assert h4.cartan[0][1] == -parse_scalar("t")
    assert h4.weights[3] == Quaternion(-parse_scalar("r2*t"))
    for i, w in enumerate(h4.weights):
        for j, a in enumerate(h4.roots):
            assert q_dot(w, a) == (ONE if i == j else ZERO)


def test_a4_weight_v4():
    a4 = build_system("A4")
    r10 = parse_scalar("r2*r5")
    assert a4.weights[3] == Quaternion(0, 0, 2 / r10, -2 / r10)


@pytest.mark.parametrize("name", ["H4", "H3", "A4", "A3"])
def test_cartan_inverse(name):
    sysobj = build_system(name)
    c = [list(r) for r in sysobj.cartan]
    assert mat_mul(c, [list(r) for r in sysobj.cartan_inverse]) == identity(len(c))


def test_h4_inverse_cartan_entries():
    inv = build_system("H4").cartan_inverse
    assert inv[0][0] == parse_scalar("8+12*t")
    assert inv[3][3] == parse_scalar("2+2*t")
    assert inv == tuple(tuple(parse_scalar("t^4") * x for x in row) for row in
                        [[parse_scalar(v) for v in r] for r in
                         [["4", "3*t", "2*t", "t"], ["3*t", "6", "4", "2"],
                          ["2*t", "4", "2*(2+s)", "2+s"], ["t", "2", "2+s", "2*s^2"]]])


@pytest.mark.parametrize("name,order", [("H4", 14400), ("H3", 120), ("A4", 120), ("A3", 24)])
def test_group_orders(name, order):
    assert coxeter_group(name).order == order


def test_generators_are_involutions():
    for name in ("H4", "A4"):
        for g in build_system(name).generators:
            assert compose(g, g) == IDENTITY


def test_generator_fixes_orthogonal_weight():
    h4 = build_system("H4")
    r1 = h4.generators[0]
    assert apply(r1, h4.weights[1]) == h4.weights[1]
    assert apply(r1, h4.roots[0]) == -h4.roots[0]


def test_compose_matches_action():
    rng = random.Random(5)
    codes = coxeter_group("H4").codes
    for _ in range(200):
        g, h = decode(rng.choice(codes)), decode(rng.choice(codes))
        gh = compose(g, h)
        for r in BASIS:
            assert apply(gh, r) == apply(g, apply(h, r))


def test_star_times_star_is_plain():
    r1, r2 = build_system("H4").generators[:2]
    assert r1.star and r2.star and not compose(r1, r2).star


def test_inverse():
    rng = random.Random(7)
    codes = coxeter_group("H4").codes
    for _ in range(100):
        g = decode(rng.choice(codes))
        assert compose(g, g.inverse()) == IDENTITY


def test_sign_canonical_form():
    p = Quaternion(0, 1, 0, 0)
    q = Quaternion(0, 0, 1, 0)
    assert GroupElement(p, q) == GroupElement(-p, -q)
    assert hash(GroupElement(p, q)) == hash(GroupElement(-p, -q))


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        GroupElement(Quaternion(2), Quaternion(1))


def test_closed_forms():
    assert coxeter_group("H4").code_set == closed_form_group("H4")
    assert coxeter_group("H3").code_set == closed_form_group("H3")
    assert coxeter_group("A4").code_set == closed_form_group("A4")


def test_h3_times_a1():
    h4 = build_system("H4")
    r0 = GroupElement(Quaternion(1), Quaternion(-1), True)
    grp = generate(list(h4.generators[:3]) + [r0], 240)
    assert grp.code_set == closed_form_group("H3xA1")


def test_aut_a4():
    aut = build_aut_a4()
    assert aut.order == 240
    assert aut.code_set == closed_form_group("AutA4")
    assert coxeter_group("A4").issubset(aut)


def test_gamma_swaps_a4_roots():
    a4 = build_system("A4")
    g = gamma_element()
    a = a4.roots
    assert apply(g, a[0]) == a[3] and apply(g, a[3]) == a[0]
    assert apply(g, a[1]) == a[2] and apply(g, a[2]) == a[1]


def test_generation_cap():
    from h4poly._kernel import CapExceeded

    with pytest.raises((CapExceeded, RuntimeError)):
        generate(list(build_system("H4").generators), cap=1000)


def test_unknown_system():
    with pytest.raises(ValueError):
        build_system("E8")
