"""Projection frames, subgroup shells, small convex hulls and mesh/table export."""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field

from . import _kernel
from .coxeter import build_system, from_zt, weight_coords
from .golden import ONE, ZERO, GoldenScalar
from .orbits import WeightVector, _A3_LABELS, _H3_LABELS, orbit
from .quaternion import Quaternion, q_dot

__all__ = [
    "ProjectionFrame",
    "Shell",
    "Hull",
    "project_shells",
    "hull3",
    "export_mesh",
    "export_table",
    "read_off",
    "scalar_json",
]

_E = (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1))


@dataclass(frozen=True)
class ProjectionFrame:
    """Orthogonal directions (Λ, e1 Λ, e2 Λ, e3 Λ), kept unnormalized."""

    axis: Quaternion

    def __post_init__(self):
        if self.axis.is_zero:
            raise ValueError("projection axis must be nonzero")

    @functools.cached_property
    def directions(self) -> tuple:
        return (self.axis,) + tuple(e * self.axis for e in _E)

    @property
    def norm(self) -> GoldenScalar:
        """Common squared length of the four directions."""
        return self.axis.norm()

    def is_orthogonal(self) -> bool:
        d = self.directions
        return all(q_dot(d[i], d[j]).is_zero for i in range(4) for j in range(i + 1, 4))

    def height(self, x: Quaternion) -> GoldenScalar:
        return q_dot(x, self.axis)

    def coords(self, x: Quaternion) -> tuple:
        """Exact ((x, e1 Λ), (x, e2 Λ), (x, e3 Λ))."""
        return tuple(q_dot(x, d) for d in self.directions[1:])


@dataclass
class Shell:
    weight: tuple
    height: GoldenScalar
    label: str
    points: list = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def float_points(self) -> list:
        return [tuple(float(a) for a in p) for p in self.points]


def _point_key(p):
    return tuple(float(a) for a in p), tuple((a.numerators, a.denominator) for a in p)


def _shell_label(subgroup: str, triple) -> str:
    pattern = tuple(0 if a.is_zero else 1 for a in triple)
    if not any(pattern):
        return "point"
    table = _H3_LABELS if subgroup == "h3" else _A3_LABELS
    return table[pattern]


def project_shells(weight, subgroup: str = "h3") -> list[Shell]:
    """Split W(H4)·Λ into W(H3) or W(A3) orbits, each projected to 3D.

    The height of a shell is the coefficient of the invariant axis (omega_4
    for H3, omega_1 for A3) and its 3D points are the coordinates in the
    frame built on that axis.
    """
    subgroup = subgroup.lower()
    if subgroup not in ("h3", "a3"):
        raise ValueError("shells are defined for the subgroups h3 and a3")
    sysobj = build_system(subgroup.upper())
    w = weight if isinstance(weight, WeightVector) else WeightVector("H4", weight)
    poly = orbit("H4", w)
    h4 = build_system("H4")
    frame = ProjectionFrame(sysobj.axis)
    us, vs = sysobj.reflections
    seen = set()
    shells = []
    for p in poly.points:
        if p in seen:
            continue
        pts, _, _ = _kernel.orbit_bfs(p, us, vs, 0)
        seen.update(pts)
        red, _ = _kernel.reduce_dominant(p, us, vs)
        rep = h4.weight(from_zt(red, poly.denominator))
        coords = weight_coords(sysobj, rep)
        triple, height = tuple(coords[:3]), coords[3]
        qs = [h4.weight(from_zt(x, poly.denominator)) for x in pts]
        points = sorted((frame.coords(q) for q in qs), key=_point_key)
        shells.append(Shell(triple, height, _shell_label(subgroup, triple), points))
    shells.sort(key=lambda s: (-float(s.height), _point_key(s.weight)))
    return shells


# -- hull ----------------------------------------------------------------------
def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


@dataclass
class Hull:
    points: list = field(repr=False)
    facets: list
    triangles: list

    @property
    def vertex_indices(self) -> list:
        return sorted({i for f in self.facets for i in f})

    @property
    def edge_count(self) -> int:
        return sum(len(f) for f in self.facets) // 2

    def euler(self) -> int:
        return len(self.vertex_indices) - self.edge_count + len(self.facets)


class _Orient:
    """Orientation of four points with float filter and exact fallback."""

    def __init__(self, exact):
        self.exact = exact
        self.flt = [tuple(float(a) for a in p) for p in exact]

    def __call__(self, a, b, c, d) -> int:
        f = self.flt
        u, v, w = _sub(f[b], f[a]), _sub(f[c], f[a]), _sub(f[d], f[a])
        det = _det3(u, v, w)
        scale = math.sqrt(sum(x * x for x in u) * sum(x * x for x in v) * sum(x * x for x in w))
        if abs(det) > 1e-9 * max(scale, 1e-300):
            return 1 if det > 0 else -1
        e = self.exact
        return _det3(_sub(e[b], e[a]), _sub(e[c], e[a]), _sub(e[d], e[a])).sign()


def hull3(points, limit: int = 128) -> Hull:
    """Convex hull of exact 3D points by gift wrapping over planar facets.

    Facets are vertex-index polygons ordered counter-clockwise seen from
    outside; ``triangles`` is a fan triangulation with the same orientation.
    """
    pts = [tuple(a if isinstance(a, GoldenScalar) else GoldenScalar(a) for a in p) for p in points]
    if len(pts) > limit:
        raise ValueError(f"hull3 handles at most {limit} points")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    if len(pts) < 4:
        raise ValueError("degenerate input: fewer than four points")
    from .linalg import rank

    if rank([_sub(p, pts[0]) for p in pts[1:]]) < 3:
        raise ValueError("degenerate input: points do not span three dimensions")
    n = len(pts)
    start = min(range(n), key=lambda i: _point_key(pts[i]))
    # virtual point a + e_z: the line through a and it touches the hull only at a
    ext = pts + [(pts[start][0], pts[start][1], pts[start][2] + ONE)]
    orient = _Orient(ext)
    virt = n
    cand = [i for i in range(n) if i != start and not _collinear(ext, start, virt, i)]
    b = cand[0]
    for p in cand[1:]:
        if orient(start, virt, b, p) > 0:
            b = p
    facets = []
    seen_facets = set()
    done_edges = set()
    todo = [(start, b)]
    while todo:
        a, b = todo.pop()
        if (a, b) in done_edges:
            continue
        c = next(i for i in range(n) if i not in (a, b) and not _collinear(ext, a, b, i))
        for p in range(n):
            if p not in (a, b, c) and orient(a, b, c, p) > 0:
                c = p
        face = [i for i in range(n) if i in (a, b, c) or orient(a, b, c, i) == 0]
        key = frozenset(face)
        if key in seen_facets:
            done_edges.add((a, b))
            continue
        seen_facets.add(key)
        poly = _order_polygon(ext, face, a, b, c, orient)
        facets.append(poly)
        for k in range(len(poly)):
            u, v = poly[k], poly[(k + 1) % len(poly)]
            done_edges.add((u, v))
            todo.append((v, u))
    facets.sort(key=lambda f: sorted(f))
    triangles = [(f[0], f[k], f[k + 1]) for f in facets for k in range(1, len(f) - 1)]
    hull = Hull(pts, facets, triangles)
    if hull.euler() != 2:
        raise RuntimeError("hull fails Euler's formula")
    return hull


def _collinear(pts, a, b, c) -> bool:
    u, v = _sub(pts[b], pts[a]), _sub(pts[c], pts[a])
    cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return all(x.is_zero for x in cross)


def _order_polygon(pts, face, a, b, c, orient):
    """Extreme points of a planar face, counter-clockwise about its outward normal.

    In-plane orientation is read off a point strictly inside the hull, which
    lies on the inner side of the face plane. Points inside the face or on its
    edges are dropped.
    """
    apex = next(i for i in range(len(pts) - 1) if orient(a, b, c, i) < 0)

    def turn(x, y, z):
        return -orient(x, y, z, apex)

    def d2(x, y):
        return sum(((p - q) * (p - q) for p, q in zip(pts[x], pts[y])), ZERO)

    first = min(face, key=lambda i: _point_key(pts[i]))
    poly = [first]
    cur = first
    while True:
        nxt = next(i for i in face if i != cur)
        for r in face:
            if r in (cur, nxt):
                continue
            t = turn(cur, nxt, r)
            if t < 0 or (t == 0 and d2(cur, r) > d2(cur, nxt)):
                nxt = r
        if nxt == first:
            return poly
        poly.append(nxt)
        cur = nxt


# -- export --------------------------------------------------------------------
def _float_rows(points):
    return [tuple(float(a) for a in p) for p in points]


def export_mesh(hull: Hull, path, fmt: str = "off") -> None:
    """Write a hull as OFF or Wavefront OBJ (polygon facets, floats at full precision)."""
    if hull is None or not hull.facets:
        raise ValueError("refusing to write an empty mesh")
    fmt = fmt.lower()
    if fmt not in ("off", "obj"):
        raise ValueError(f"unknown mesh format {fmt!r}; choose off or obj")
    used = hull.vertex_indices
    remap = {old: new for new, old in enumerate(used)}
    verts = _float_rows([hull.points[i] for i in used])
    lines = []
    if fmt == "off":
        lines.append("OFF")
        lines.append(f"{len(verts)} {len(hull.facets)} {hull.edge_count}")
        lines += [" ".join(repr(x) for x in v) for v in verts]
        lines += [" ".join([str(len(f))] + [str(remap[i]) for i in f]) for f in hull.facets]
    else:
        lines += ["v " + " ".join(repr(x) for x in v) for v in verts]
        lines += ["f " + " ".join(str(remap[i] + 1) for i in f) for f in hull.facets]
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write mesh to {path}: {exc}") from exc


def read_off(path) -> tuple[list, list]:
    """Vertices and faces of an OFF file."""
    with open(path, encoding="utf-8") as fh:
        tokens = [line.split() for line in fh if line.strip() and not line.startswith("#")]
    if tokens[0] != ["OFF"]:
        raise ValueError(f"{path} is not an OFF file")
    nv, nf, _ = (int(x) for x in tokens[1])
    verts = [tuple(float(x) for x in row) for row in tokens[2:2 + nv]]
    faces = [tuple(int(x) for x in row[1:]) for row in tokens[2 + nv:2 + nv + nf]]
    return verts, faces


def scalar_json(x: GoldenScalar) -> dict:
    return {"exact": x.to_literal(), "float": float(x)}


def export_table(data, path) -> None:
    """Deterministic JSON dump (sorted keys)."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write table to {path}: {exc}") from exc
