"""Orbits W(G)·Λ, dominant representatives and the cell census of a W(H4) orbit."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import _kernel
from .coxeter import (
    IDENTITY,
    CoxeterSystem,
    FiniteGroup,
    GroupElement,
    build_system,
    compose,
    coxeter_group,
    from_zt,
    reflection_data,
    to_zt,
    weight_coords,
)
from .golden import ZERO, GoldenScalar, parse_scalar
from .linalg import rank
from .quaternion import Quaternion, q_dot

__all__ = [
    "WeightVector",
    "OrbitPolytope",
    "CellType",
    "CellCensus",
    "parse_weight",
    "orbit",
    "orbit_points",
    "dominant_rep",
    "cell_census",
    "parabolic_order",
    "cell_label",
]


def parse_weight(text: str) -> tuple:
    """'1,0,t,1/2' -> tuple of GoldenScalar."""
    parts = [p.strip() for p in str(text).split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad weight literal {text!r}")
    return tuple(parse_scalar(p) for p in parts)


def _gs(x) -> GoldenScalar:
    if isinstance(x, GoldenScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return GoldenScalar(x)


@dataclass(frozen=True)
class WeightVector:
    """sum_i a_i w_i in the weight basis of a named system."""

    system: str
    coeffs: tuple

    def __post_init__(self):
        sysobj = build_system(self.system)
        object.__setattr__(self, "system", sysobj.name)
        raw = parse_weight(self.coeffs) if isinstance(self.coeffs, str) else self.coeffs
        coeffs = tuple(_gs(a) for a in raw)
        if len(coeffs) != sysobj.rank:
            raise ValueError(f"{sysobj.name} weights need {sysobj.rank} coefficients, got {len(coeffs)}")
        for a in coeffs:
            if not a.in_q_tau:
                raise ValueError(f"weight coefficient {a} must lie in Q(t)")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def parse(cls, system: str, text: str) -> WeightVector:
        return cls(system, parse_weight(text))

    @functools.cached_property
    def quaternion(self) -> Quaternion:
        return build_system(self.system).weight(self.coeffs)

    @functools.cached_property
    def omega(self) -> tuple:
        """Coordinates in the H4 weight basis."""
        return tuple(q_dot(self.quaternion, a) for a in build_system("H4").roots)

    @property
    def is_dominant(self) -> bool:
        return all(a.sign() >= 0 for a in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coeffs)

    def label(self) -> str:
        return "(" + ",".join(a.to_literal() for a in self.coeffs) + ")"

    def __str__(self):
        return f"{self.system}{self.label()}"


def _system(system) -> CoxeterSystem:
    return system if isinstance(system, CoxeterSystem) else build_system(system)


def orbit_points(system, omega: tuple, cap: int = 0):
    """Raw kernel orbit: (integer points, denominator, parents, generator indices)."""
    sysobj = _system(system)
    us, vs = sysobj.reflections
    flat, den = to_zt(omega)
    pts, parents, gens = _kernel.orbit_bfs(flat, us, vs, cap)
    return pts, den, parents, gens


@functools.lru_cache(maxsize=None)
def parabolic_order(nodes: tuple) -> int:
    """|W_S| for the H4 parabolic subgroup on the given 1-based nodes."""
    if not nodes:
        return 1
    return coxeter_group("H4", tuple(sorted(nodes))).order


@dataclass
class OrbitPolytope:
    seed: WeightVector
    group: FiniteGroup
    points: list = field(repr=False)
    denominator: int
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    @functools.cached_property
    def omega_vertices(self) -> list:
        """Exact vertices in H4 weight coordinates, canonically ordered."""
        return [from_zt(p, self.denominator) for p in self.points]

    @functools.cached_property
    def vertices(self) -> list:
        h4 = build_system("H4")
        return [h4.weight(x) for x in self.omega_vertices]

    def float_vertices(self) -> list:
        return [q.to_floats() for q in self.vertices]


def orbit(system, weight, cap: int = 0) -> OrbitPolytope:
    """W(system)·Λ for a dominant weight Λ of that system."""
    sysobj = _system(system)
    w = weight if isinstance(weight, WeightVector) else WeightVector(sysobj.name, weight)
    if w.system != sysobj.name:
        raise ValueError(f"weight belongs to {w.system}, not {sysobj.name}")
    if w.is_zero:
        raise ValueError("trivial weight: the orbit is a single point at the origin")
    if not w.is_dominant:
        raise ValueError(f"weight {w.label()} is not dominant; use dominant_rep first")
    pts, den, _, _ = orbit_points(sysobj, w.omega, cap)
    pts = sorted(pts)
    group = coxeter_group(sysobj.name)
    zero_nodes = tuple(k for k, a in enumerate(w.coeffs) if a.is_zero)
    stab = generate_stabilizer(sysobj, zero_nodes)
    if len(pts) * stab != group.order:
        raise RuntimeError(
            f"orbit-stabilizer identity fails for {w}: {len(pts)} x {stab} != {group.order}"
        )
    return OrbitPolytope(w, group, pts, den, stab)


def generate_stabilizer(sysobj: CoxeterSystem, zero_nodes) -> int:
    """Order of the subgroup generated by the reflections fixing a dominant weight."""
    if not zero_nodes:
        return 1
    from .coxeter import generate

    gens = [sysobj.generators[k] for k in zero_nodes]
    return generate(gens).order


def dominant_rep(system, coeffs) -> tuple[tuple, GroupElement]:
    """Dominant coefficients in the orbit of ``coeffs`` and an element mapping the input there."""
    sysobj = _system(system)
    w = WeightVector(sysobj.name, coeffs)
    us, vs = sysobj.reflections
    flat, den = to_zt(w.omega)
    out, word = _kernel.reduce_dominant(flat, us, vs)
    witness = IDENTITY
    for g in word:
        witness = compose(sysobj.generators[g], witness)
    omega = from_zt(out, den)
    x = build_system("H4").weight(omega)
    dom = weight_coords(sysobj, x)[: sysobj.rank]
    return dom, witness


# -- cells -------------------------------------------------------------------
_H3_LABELS = {
    (1, 0, 0): "dodecahedron",
    (0, 1, 0): "icosidodecahedron",
    (0, 0, 1): "icosahedron",
    (1, 1, 0): "truncated dodecahedron",
    (0, 1, 1): "truncated icosahedron",
    (1, 0, 1): "small rhombicosidodecahedron",
    (1, 1, 1): "great rhombicosidodecahedron",
}
_A3_LABELS = {
    (1, 0, 0): "tetrahedron",
    (0, 0, 1): "tetrahedron",
    (0, 1, 0): "octahedron",
    (1, 1, 0): "truncated tetrahedron",
    (0, 1, 1): "truncated tetrahedron",
    (1, 0, 1): "cuboctahedron",
    (1, 1, 1): "truncated octahedron",
}


def cell_label(deleted: int, pattern: tuple) -> str | None:
    """Name of the rank-3 cell for the H4 diagram with node ``deleted`` removed.

    ``pattern`` is the 0/1 nonzero pattern of the four Dynkin labels.
    """
    a1, a2, a3, a4 = pattern
    if deleted == 4:
        return _H3_LABELS.get((a1, a2, a3))
    if deleted == 1:
        return _A3_LABELS.get((a2, a3, a4))
    if deleted == 2:
        if a1 and (a3 or a4):
            return "hexagonal prism" if (a3 and a4) else "triangular prism"
        return None
    if deleted == 3:
        if a4 and (a1 or a2):
            return "decagonal prism" if (a1 and a2) else "pentagonal prism"
        return None
    raise ValueError("deleted node must be 1..4")


@dataclass(frozen=True)
class CellType:
    deleted_node: int
    label: str
    subgroup_nodes: tuple
    subgroup_order: int
    cell_vertices: int
    count: int
    per_vertex: int

    def to_json(self) -> dict:
        return {
            "deleted_node": self.deleted_node,
            "label": self.label,
            "subgroup_nodes": list(self.subgroup_nodes),
            "subgroup_order": self.subgroup_order,
            "cell_vertices": self.cell_vertices,
            "count": self.count,
            "per_vertex": self.per_vertex,
        }


@dataclass
class CellCensus:
    weight: WeightVector
    vertices: int
    cells: list

    @property
    def total(self) -> int:
        return sum(c.count for c in self.cells)

    def by_label(self) -> dict:
        out: dict = {}
        for c in self.cells:
            out[c.label] = out.get(c.label, 0) + c.count
        return out

    def per_vertex_by_label(self) -> dict:
        out: dict = {}
        for c in self.cells:
            out[c.label] = out.get(c.label, 0) + c.per_vertex
        return out

    def to_json(self) -> dict:
        return {
            "weight": [a.to_literal() for a in self.weight.coeffs],
            "vertices": self.vertices,
            "total_cells": self.total,
            "cells": [c.to_json() for c in self.cells],
        }


def affine_rank(points, den: int = 1) -> int:
    if len(points) <= 1:
        return 0
    base = from_zt(points[0], den)
    diffs = []
    for p in points[1:]:
        x = from_zt(p, den)
        diffs.append([a - b for a, b in zip(x, base)])
    return rank(diffs)


def cell_census(weight) -> CellCensus:
    """Cells of W(H4)·Λ: one type per deleted node whose parabolic orbit is three-dimensional."""
    w = weight if isinstance(weight, WeightVector) else WeightVector("H4", weight)
    if w.system != "H4":
        raise ValueError("cell census needs an H4 weight")
    poly = orbit("H4", w)
    h4 = build_system("H4")
    flat, den = to_zt(w.omega)
    pattern = tuple(0 if a.is_zero else 1 for a in w.coeffs)
    zero_nodes = tuple(k for k in range(4) if not pattern[k])
    cells = []
    for j in range(1, 5):
        nodes = tuple(k for k in range(1, 5) if k != j)
        us, vs = reflection_data([h4.roots[k - 1] for k in nodes])
        sub_pts, _, _ = _kernel.orbit_bfs(flat, us, vs, 0)
        if affine_rank(sub_pts, den) != 3:
            continue
        order = parabolic_order(nodes)
        count = 14400 // order
        # the stabilizer of omega_j in W(H4) is exactly W_S: count the orbit of omega_j
        centers, _, _, _ = orbit_points(h4, _unit_omega(j))
        if len(centers) != count:
            raise RuntimeError(f"cell count mismatch for node {j}: {len(centers)} != {count}")
        num = count * len(sub_pts)
        if num % poly.size:
            raise RuntimeError(f"non-integral cells per vertex for node {j}")
        per_vertex = num // poly.size
        # incident cells at Λ: centers in Stab(Λ)·omega_j
        if zero_nodes:
            zus, zvs = reflection_data([h4.roots[k] for k in zero_nodes])
            zf, _ = to_zt(_unit_omega(j))
            incident = len(_kernel.orbit_bfs(zf, zus, zvs, 0)[0])
        else:
            incident = 1
        if incident != per_vertex:
            raise RuntimeError(f"incidence mismatch for node {j}: {incident} != {per_vertex}")
        label = cell_label(j, pattern)
        if label is None:
            raise RuntimeError(f"no cell name for node {j} with pattern {pattern}")
        cells.append(CellType(j, label, nodes, order, len(sub_pts), count, per_vertex))
    lhs = sum(c.count * c.cell_vertices for c in cells)
    rhs = poly.size * sum(c.per_vertex for c in cells)
    if lhs != rhs:
        raise RuntimeError("cell census double count fails")
    return CellCensus(w, poly.size, cells)


def _unit_omega(j: int) -> tuple:
    return tuple(GoldenScalar(1) if k == j else ZERO for k in range(1, 5))
