from __future__ import annotations

import pytest

from h4poly.coxeter import build_system
from h4poly.dual import dual_cell_geometry, dual_polytope
from h4poly.geometry import Hull, ProjectionFrame, export_mesh, hull3, project_shells, read_off
from h4poly.golden import GoldenScalar, parse_scalar
from h4poly.orbits import WeightVector
from h4poly.quaternion import Quaternion

TETRA = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_frame_is_orthogonal():
    axis = Quaternion(parse_scalar("t"), 1, parse_scalar("-s"), parse_scalar("1/2"))
    frame = ProjectionFrame(axis)
    assert frame.is_orthogonal()
    assert all(d.norm() == frame.norm for d in frame.directions)


def test_zero_axis_rejected():
    with pytest.raises(ValueError):
        ProjectionFrame(Quaternion(0))


def test_tetrahedron_hull(tmp_path):
    hull = hull3(TETRA)
    assert (len(hull.vertex_indices), len(hull.facets), hull.edge_count) == (4, 4, 6)
    path = tmp_path / "t.off"
    export_mesh(hull, path, "off")
    verts, faces = read_off(path)
    assert len(verts) == 4 and len(faces) == 4
    lines = path.read_text().splitlines()
    assert lines[:2] == ["OFF", "4 4 6"]


def test_interior_points_dropped():
    cube = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
    hull = hull3(cube + [(1, 1, 1), (1, 1, 0)])
    assert len(hull.facets) == 6
    assert len(hull.vertex_indices) == 8
    assert all(len(f) == 4 for f in hull.facets)


def test_facets_face_outward():
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    hull = hull3(cube)
    pts = [tuple(float(a) for a in p) for p in hull.points]
    for a, b, c in hull.triangles:
        u = [pts[b][k] - pts[a][k] for k in range(3)]
        v = [pts[c][k] - pts[a][k] for k in range(3)]
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        cen = [0.5 - pts[a][k] for k in range(3)]
        assert sum(n[k] * cen[k] for k in range(3)) < 0


@pytest.mark.parametrize("points", [TETRA[:3], [(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)],
                                    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 3, 0)],
                                    TETRA + [(0, 0, 0)]])
def test_degenerate_input(points):
    with pytest.raises(ValueError):
        hull3(points)


def test_point_limit():
    with pytest.raises(ValueError):
        hull3(TETRA, limit=3)


def test_empty_mesh_rejected(tmp_path):
    with pytest.raises(ValueError):
        export_mesh(Hull([], [], []), tmp_path / "x.off")


def test_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        export_mesh(hull3(TETRA), tmp_path / "x.stl", "stl")


def test_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        export_mesh(hull3(TETRA), tmp_path / "missing" / "x.off")


def test_off_round_trip(tmp_path):
    dual = dual_polytope("0,0,1,0")
    pts = [p for _, p in dual_cell_geometry(dual)]
    hull = hull3(pts)
    path = tmp_path / "cell.off"
    export_mesh(hull, path)
    verts, _ = read_off(path)
    want = [tuple(float(a) for a in hull.points[i]) for i in hull.vertex_indices]
    for v, w in zip(verts, want):
        assert all(abs(a - b) <= 1e-12 * max(1.0, abs(b)) for a, b in zip(v, w))


def test_obj_output(tmp_path):
    path = tmp_path / "t.obj"
    export_mesh(hull3(TETRA), path, "obj")
    lines = path.read_text().splitlines()
    assert sum(ln.startswith("v ") for ln in lines) == 4
    assert sum(ln.startswith("f ") for ln in lines) == 4
    assert "f 0" not in path.read_text()


def test_dual_cell_hulls():
    assert len(hull3([p for _, p in dual_cell_geometry(dual_polytope("0,1,0,0"))]).facets) == 6
    assert len(hull3([p for _, p in dual_cell_geometry(dual_polytope("0,0,1,0"))]).facets) == 10


def test_600_cell_h3_shells():
    shells = project_shells("0,0,0,1", "h3")
    assert [s.size for s in shells] == [1, 12, 20, 12, 30, 12, 20, 12, 1]
    assert shells[1].label == "icosahedron"
    assert shells[2].label == "dodecahedron"
    assert shells[4].label == "icosidodecahedron"
    assert shells[0].label == shells[-1].label == "point"


def test_600_cell_a3_shells():
    shells = project_shells("0,0,0,1", "a3")
    assert sum(s.size for s in shells) == 120
    assert {s.label for s in shells} <= {"point", "tetrahedron", "octahedron", "truncated tetrahedron",
                                         "cuboctahedron", "truncated octahedron"}


def test_shell_norm_identity():
    """|p|^2 / |axis|^2 + height^2 |omega_4|^2 = |Λ|^2 in the unnormalized frame."""
    w = WeightVector.parse("H4", "0,1,0,0")
    h4 = build_system("H4")
    axis = build_system("H3").axis
    n4 = h4.weights[3].norm()
    target = w.quaternion.norm()
    for s in project_shells(w, "h3"):
        for p in s.points[:3]:
            sq = sum((a * a for a in p), GoldenScalar(0))
            assert sq / axis.norm() + s.height * s.height * n4 == target


def test_great_rhombicosidodecahedron_shell():
    shells = project_shells("1,1,1,1", "h3")
    big = [s for s in shells if s.label == "great rhombicosidodecahedron"][0]
    assert len(hull3(big.points, limit=len(big.points)).facets) == 62


def test_bad_subgroup():
    with pytest.raises(ValueError):
        project_shells("0,0,0,1", "a4")
