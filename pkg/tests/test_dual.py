from __future__ import annotations

import math

import pytest

from h4poly.coxeter import apply, build_system
from h4poly.dual import (
    _pair,
    congruent,
    distance_signature,
    dual_cell_geometry,
    dual_polytope,
    incident_cells,
    involution_scale,
    published_scales,
    solve_scales,
)
from h4poly.golden import ONE, parse_scalar
from h4poly.orbits import WeightVector
from h4poly.reference import DUALS, UNIFORM_WEIGHTS


def test_rectified_600_cell_scale():
    dual = dual_polytope("0,1,0,0", anchor=4)
    assert dual.scales[1] == parse_scalar("2/(3*t)")
    assert dual.scales[4] == ONE
    r = dual.radii()
    assert r[4] / r[1] == pytest.approx(1.061, abs=5e-4)


@pytest.mark.parametrize("key", [k for k in DUALS if DUALS[k]["factors"]])
def test_published_scales(key):
    dual = dual_polytope(key, anchor=DUALS[key]["unscaled"])
    for name, (node, value) in published_scales(key).items():
        assert dual.scales[node] == value, name


def test_single_cell_type_has_unit_scale():
    for text in ("0,0,0,1", "1,0,0,0"):
        dual = dual_polytope(text)
        assert list(dual.scales.values()) == [ONE]


@pytest.mark.parametrize("text", UNIFORM_WEIGHTS)
def test_hyperplane_and_counts(text):
    dual = dual_polytope(text)
    assert dual.hyperplane_ok()
    assert dual.vertex_count == dual.primal_cells
    assert dual.cell_count == dual.primal_vertices
    assert len(dual.cell_points) == sum(len(v) for v in dual.centres.values())


def test_default_anchor_is_largest_product():
    dual = dual_polytope("1,0,0,1")
    assert dual.scales[dual.anchor] == ONE
    assert all(s >= ONE for s in dual.scales.values())


def test_anchor_choice_only_rescales():
    a = solve_scales("0,1,1,0", anchor=1)
    b = solve_scales("0,1,1,0", anchor=4)
    k = a[1] / b[1]
    assert all(a[j] == k * b[j] for j in a)


def test_incident_cells_fixed_by_stabilizer():
    w = WeightVector.parse("H4", "0,1,0,1")
    h4 = build_system("H4")
    cells = incident_cells(w)
    for j, pts in cells.items():
        qs = {h4.weight(c) for c in pts}
        for k in (0, 2):
            g = h4.generators[k]
            assert {apply(g, q) for q in qs} == qs


def test_dual_cell_is_planar_section():
    dual = dual_polytope("1,1,0,0")
    lam = dual.weight.omega
    assert len({_pair(c, lam) for _, c in dual.cell_points}) == 1
    pts = [p for _, p in dual_cell_geometry(dual)]
    assert len(set(pts)) == len(pts)


def test_congruence_is_similarity_invariant():
    dual = dual_polytope("0,1,0,0")
    pts = [p for _, p in dual_cell_geometry(dual)]
    k = parse_scalar("3*t")
    moved = [(-p[1] * k, p[0] * k, p[2] * k + 1) for p in pts]
    assert congruent(pts, moved)
    assert distance_signature(pts)[-1] == ONE


def test_involution():
    assert involution_scale("0,0,0,1", "1,0,0,0") == ONE
    assert involution_scale("1,0,0,0", "0,0,0,1") == ONE


def test_rejects_bad_weights():
    for text in ("0,0,0,0", "1,-1,0,0"):
        with pytest.raises(ValueError):
            dual_polytope(text)


def test_radii_are_finite():
    dual = dual_polytope("1,1,1,1")
    assert all(math.isfinite(r) and r > 0 for r in dual.radii().values())
