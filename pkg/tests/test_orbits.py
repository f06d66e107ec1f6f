from __future__ import annotations

import pytest

from h4poly.coxeter import apply, build_system
from h4poly.golden import ZERO, parse_scalar
from h4poly.orbits import WeightVector, affine_rank, cell_census, dominant_rep, orbit, parse_weight
from h4poly.reference import CELLS, ORBIT_SIZES


@pytest.mark.parametrize("text,size", sorted(ORBIT_SIZES.items()))
def test_orbit_sizes(text, size):
    poly = orbit("H4", WeightVector.parse("H4", text))
    assert poly.size == size
    assert poly.size * poly.stabilizer_order == 14400


@pytest.mark.parametrize("text", sorted(CELLS))
def test_cell_census(text):
    census = cell_census(WeightVector.parse("H4", text))
    got = {label: (census.by_label()[label], census.per_vertex_by_label()[label]) for label in census.by_label()}
    assert got == CELLS[text]
    for c in census.cells:
        assert c.count * c.cell_vertices == census.vertices * c.per_vertex


def test_orbit_points_have_equal_norm():
    poly = orbit("H4", "0,0,1,1")
    norms = {q.norm() for q in poly.vertices}
    assert len(norms) == 1


def test_600_cell_vertices_are_scaled_icosians():
    poly = orbit("H4", "0,0,0,1")
    w4 = build_system("H4").weights[3]
    assert {q.norm() for q in poly.vertices} == {w4.norm()}
    assert len({q for q in poly.vertices}) == 120


def test_subgroup_orbits():
    assert orbit("H3", "1,0,0").size == 20
    assert orbit("A4", "1,0,0,0").size == 5
    assert orbit("A4", "1,1,1,1").size == 120
    assert orbit("A3", "0,1,0").size == 6


def test_irrational_weight():
    poly = orbit("H4", WeightVector("H4", (parse_scalar("t"), ZERO, ZERO, parse_scalar("1"))))
    assert poly.size == 2400


@pytest.mark.parametrize("text", ["0,0,0,0", "0,-1,0,1", "s,0,0,1"])
def test_rejects_trivial_and_non_dominant(text):
    with pytest.raises(ValueError):
        orbit("H4", text)


def test_wrong_system():
    with pytest.raises(ValueError):
        orbit("H3", WeightVector.parse("H4", "0,0,0,1"))


def test_bad_literal():
    with pytest.raises(ValueError):
        parse_weight("1,,2")


def test_dominant_rep_round_trip():
    h4 = build_system("H4")
    coeffs = tuple(parse_scalar(x) for x in ("1", "-2", "t", "0"))
    dom, g = dominant_rep("H4", coeffs)
    assert all(x.sign() >= 0 for x in dom)
    src = WeightVector("H4", coeffs).quaternion
    assert apply(g, src) == h4.weight(dom)


def test_affine_rank_of_cell_vertices():
    poly = orbit("H4", "0,0,0,1")
    assert affine_rank(poly.points[:5], poly.denominator) <= 4
    assert affine_rank(poly.points, poly.denominator) == 4
