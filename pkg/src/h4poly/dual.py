"""Duals of the uniform W(H4) polytopes.

The dual vertex set is the union of the cell-centre orbits, each centre type
rescaled so that the centres incident to a vertex Λ lie in one hyperplane
orthogonal to Λ. Those scaled centres form the dual cell at Λ.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

from . import _kernel
from .coxeter import build_system, from_zt, reflection_data, to_zt
from .golden import ONE, ZERO, GoldenScalar, parse_scalar
from .orbits import WeightVector, _unit_omega, cell_census, orbit_points
from .quaternion import Quaternion, q_dot
from .reference import DUALS

__all__ = [
    "DualPolytope",
    "incident_cells",
    "solve_scales",
    "dual_polytope",
    "dual_cell_geometry",
    "dual_vertex_omegas",
    "distance_signature",
    "congruent",
    "published_cell_points",
    "published_scales",
    "radii_ratios",
    "cell_distances",
    "scaled_equal",
    "involution_scale",
]

_E = (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1))


def _weight(weight) -> WeightVector:
    if isinstance(weight, str):
        weight = WeightVector.parse("H4", weight)
    w = weight if isinstance(weight, WeightVector) else WeightVector("H4", weight)
    if w.system != "H4":
        raise ValueError("duals are built for H4 weights")
    if w.is_zero:
        raise ValueError("trivial weight has no dual")
    if not w.is_dominant:
        raise ValueError(f"weight {w.label()} is not dominant")
    return w


def incident_cells(weight) -> dict:
    """node j -> exact centres (H4 weight coordinates) of the type-j cells at Λ.

    The centres are the orbit of omega_j under the stabilizer of Λ, which is
    generated by the simple reflections of the zero nodes of Λ.
    """
    w = _weight(weight)
    census = cell_census(w)
    h4 = build_system("H4")
    zero_nodes = [k for k, a in enumerate(w.coeffs) if a.is_zero]
    us, vs = reflection_data([h4.roots[k] for k in zero_nodes]) if zero_nodes else ([], [])
    out = {}
    for cell in census.cells:
        flat, den = to_zt(_unit_omega(cell.deleted_node))
        pts, _, _ = _kernel.orbit_bfs(flat, us, vs, 0) if us else ([flat], None, None)
        if len(pts) != cell.per_vertex:
            raise RuntimeError(f"node {cell.deleted_node}: {len(pts)} incident centres, expected {cell.per_vertex}")
        out[cell.deleted_node] = [from_zt(p, den) for p in sorted(pts)]
    return out


def _pair(x, y) -> GoldenScalar:
    """(X, Y) for two points given in H4 weight coordinates."""
    inv = build_system("H4").cartan_inverse
    s = ZERO
    for i in range(4):
        if x[i].is_zero:
            continue
        for j in range(4):
            if not y[j].is_zero:
                s = s + x[i] * y[j] * inv[i][j]
    return s


def solve_scales(weight, anchor: int | None = None, centres: dict | None = None) -> dict:
    """node j -> λ_j with λ_j (c_j, Λ) = (c_anchor, Λ) for every incident centre c_j."""
    w = _weight(weight)
    centres = incident_cells(w) if centres is None else centres
    if not centres:
        raise ValueError("no incident cells")
    lam = w.omega
    dots = {}
    for j, pts in centres.items():
        values = {_pair(c, lam) for c in pts}
        if len(values) != 1:
            raise RuntimeError(f"centres of type {j} do not share one product with the vertex")
        d = values.pop()
        if d.is_zero:
            raise ValueError(f"cell centre of type {j} is orthogonal to the vertex; no finite scale exists")
        dots[j] = d
    if anchor is None:
        anchor = max(sorted(dots), key=lambda j: dots[j])
    if anchor not in dots:
        raise ValueError(f"anchor node {anchor} carries no incident cell")
    return {j: dots[anchor] / dots[j] for j in sorted(dots)}


@dataclass
class DualPolytope:
    weight: WeightVector
    anchor: int
    scales: dict
    centres: dict = field(repr=False)
    orbit_sizes: dict
    primal_vertices: int
    primal_cells: int

    @property
    def vertex_count(self) -> int:
        return sum(self.orbit_sizes.values())

    @property
    def cell_count(self) -> int:
        return self.primal_vertices

    def radius_squared(self, j: int) -> GoldenScalar:
        om = _unit_omega(j)
        return self.scales[j] * self.scales[j] * _pair(om, om)

    def radii(self) -> dict:
        return {j: math.sqrt(float(self.radius_squared(j))) for j in self.scales}

    @functools.cached_property
    def cell_points(self) -> list:
        """Scaled incident centres as (node, exact H4 weight coordinates)."""
        out = []
        for j in sorted(self.centres):
            s = self.scales[j]
            out += [(j, tuple(x * s for x in c)) for c in self.centres[j]]
        return out

    def hyperplane_ok(self) -> bool:
        lam = self.weight.omega
        vals = {_pair(c, lam) for _, c in self.cell_points}
        return len(vals) == 1

    def to_json(self) -> dict:
        radii = self.radii()
        return {
            "weight": [a.to_literal() for a in self.weight.coeffs],
            "anchor": self.anchor,
            "scales": {str(j): s.to_literal() for j, s in self.scales.items()},
            "radii": {str(j): round(r, 12) for j, r in radii.items()},
            "radius_squared": {str(j): self.radius_squared(j).to_literal() for j in self.scales},
            "orbit_sizes": {str(j): n for j, n in self.orbit_sizes.items()},
            "dual_vertices": self.vertex_count,
            "dual_cells": self.cell_count,
            "cell": [[str(j)] + [x.to_literal() for x in p] for j, p in dual_cell_geometry(self)],
        }


def dual_polytope(weight, anchor: int | None = None) -> DualPolytope:
    w = _weight(weight)
    census = cell_census(w)
    centres = incident_cells(w)
    scales = solve_scales(w, anchor, centres)
    if anchor is None:
        anchor = next(j for j, s in scales.items() if s == ONE)
    sizes = {c.deleted_node: c.count for c in census.cells}
    dual = DualPolytope(w, anchor, scales, centres, sizes, census.vertices, census.total)
    if not dual.hyperplane_ok():
        raise RuntimeError(f"scaled centres at {w} are not coplanar")
    if dual.vertex_count != census.total:
        raise RuntimeError("dual vertex count differs from the primal cell count")
    return dual


def dual_cell_geometry(dual: DualPolytope) -> list:
    """(node, exact triple) per scaled centre in the frame (e1 Λ, e2 Λ, e3 Λ)."""
    h4 = build_system("H4")
    lam = dual.weight.quaternion
    frame = [e * lam for e in _E]
    heights = set()
    out = []
    for j, c in dual.cell_points:
        x = h4.weight(c)
        heights.add(q_dot(x, lam))
        out.append((j, tuple(q_dot(x, f) for f in frame)))
    if len(heights) != 1:
        raise RuntimeError("dual cell points have different heights along the vertex")
    return out


def dual_vertex_omegas(dual: DualPolytope) -> list:
    """All dual vertices in exact H4 weight coordinates, sorted."""
    h4 = build_system("H4")
    out = []
    for j, s in dual.scales.items():
        pts, den, _, _ = orbit_points(h4, tuple(x * s for x in _unit_omega(j)))
        out += [from_zt(p, den) for p in pts]
    return sorted(out, key=lambda x: tuple(float(a) for a in x))


def cell_distances(dual: DualPolytope) -> list:
    """Sorted 4D pairwise distances (floats) between the points of the dual cell."""
    pts = [c for _, c in dual.cell_points]
    out = []
    for p, q in itertools.combinations(pts, 2):
        diff = tuple(a - b for a, b in zip(p, q))
        out.append(math.sqrt(float(_pair(diff, diff))))
    return sorted(out)


def scaled_equal(points_a, points_b):
    """Exact scalar k with points_a = k * points_b as sets, or None."""
    if len(points_a) != len(points_b) or not points_a:
        return None
    a0 = max(points_a)
    b0 = max(points_b)
    k = None
    for x, y in zip(a0, b0):
        if x.is_zero != y.is_zero:
            return None
        if not y.is_zero:
            r = x / y
            if k is not None and r != k:
                return None
            k = r
    if k is None:
        return None
    target = set(points_a)
    if all(tuple(k * y for y in p) in target for p in points_b):
        return k
    return None


def involution_scale(weight, target) -> GoldenScalar | None:
    """Scale k with dual vertices of W(H4)·weight = k · W(H4)·target, or None."""
    from .orbits import orbit

    dual = dual_polytope(weight)
    poly = orbit("H4", target)
    return scaled_equal(dual_vertex_omegas(dual), poly.omega_vertices)


# -- comparisons ---------------------------------------------------------------
def distance_signature(points) -> list:
    """Sorted squared pairwise distances divided by the largest (exact)."""
    d2 = []
    for p, q in itertools.combinations(points, 2):
        s = ZERO
        for a, b in zip(p, q):
            s = s + (a - b) * (a - b)
        d2.append(s)
    if not d2:
        return []
    top = max(d2)
    if top.is_zero:
        raise ValueError("all points coincide")
    return sorted(x / top for x in d2)


def congruent(points_a, points_b, rel_tol: float = 1e-9) -> bool:
    """Congruence up to similarity via the pairwise-distance multiset."""
    if len(points_a) != len(points_b):
        return False
    sa, sb = distance_signature(points_a), distance_signature(points_b)
    return all(abs(float(x) - float(y)) <= rel_tol * max(1.0, abs(float(y))) for x, y in zip(sa, sb))


def published_scales(key: str) -> dict:
    """Published factor name -> (node, exact value)."""
    return {name: (node, parse_scalar(lit)) for name, (node, lit) in DUALS[key]["factors"].items()}


def published_cell_points(key: str) -> list:
    """Published dual-cell coordinates with the published factors substituted."""
    entry = DUALS[key]
    factors = {name: val for name, (_, val) in published_scales(key).items()}
    out = []
    for name, pre, triple in entry["cell"]:
        k = parse_scalar(pre)
        if name is not None:
            k = k * factors[name]
        out.append(tuple(parse_scalar(x) * k for x in triple))
    return out


def radii_ratios(dual: DualPolytope, nodes) -> list:
    """Radii of the listed nodes divided by the radius of the first."""
    r = dual.radii()
    base = r[nodes[0]]
    return [r[j] / base for j in nodes]
