"""Branching of W(H4) orbits under W(H3), W(A4) and W(A3).

Every H4 orbit is the union of the subgroup orbits of the 120 vectors p·Λ,
p in I (the elements [p, 1] are right-coset representatives for both W(H3)
and W(A4)). Each subgroup orbit is labelled by its dominant weight and, for
H3, by the coefficient of the invariant axis omega_4.
"""
from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _kernel
from ._kernel import _pykernel
from .coxeter import (
    GroupElement,
    build_system,
    coxeter_group,
    encode,
    from_zt,
    to_zt,
)
from .golden import ZERO, GoldenScalar
from .orbits import WeightVector, orbit
from .qgroups import icosian_group
from .quaternion import Quaternion, q_dot

__all__ = [
    "BranchTerm",
    "BranchTable",
    "coset_reps",
    "verify_coset_reps",
    "branch_h3",
    "branch_a4",
    "branch_a4_to_a3",
    "a3_split_geometric",
    "branch_h4_to_a3",
    "SUBGROUPS",
]

SUBGROUPS = ("h3", "a4", "a3")


@dataclass(frozen=True)
class BranchTerm:
    weight: tuple
    height: GoldenScalar | None
    multiplicity: int = 1
    size: int = 0
    cosets: int = 0

    def key(self):
        return (self.weight, self.height)

    def label(self) -> str:
        w = "(" + ",".join(a.to_literal() for a in self.weight) + ")"
        if self.height is None:
            return w
        return f"{w}({self.height.to_literal()})"

    def to_json(self) -> dict:
        out = {
            "weight": [a.to_literal() for a in self.weight],
            "multiplicity": self.multiplicity,
            "size": self.size,
        }
        if self.height is not None:
            out["height"] = self.height.to_literal()
            out["height_float"] = float(self.height)
        if self.cosets:
            out["cosets"] = self.cosets
        return out


@dataclass
class BranchTable:
    seed: tuple
    subgroup: str
    terms: list
    orbit_size: int
    extras: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(t.multiplicity * t.size for t in self.terms)

    def conserved(self) -> bool:
        return self.total() == self.orbit_size

    def multiset(self) -> dict:
        out: dict = {}
        for t in self.terms:
            out[t.key()] = out.get(t.key(), 0) + t.multiplicity
        return out

    def to_json(self) -> dict:
        data = {
            "seed": [a.to_literal() for a in self.seed],
            "subgroup": self.subgroup,
            "orbit_size": self.orbit_size,
            "terms": [t.to_json() for t in self.terms],
        }
        for k, v in self.extras.items():
            data[k] = v
        return data


# -- coset representatives ---------------------------------------------------
def coset_reps() -> list[GroupElement]:
    """The 120 elements [p, 1], p in I, in canonical order of p."""
    one = Quaternion(1)
    return [GroupElement(p, one, check=False) for p in icosian_group().elements]


@functools.lru_cache(maxsize=None)
def verify_coset_reps(subgroup: str) -> bool:
    """Each right coset W_sub·g of W(H4) is hit exactly once by the representatives."""
    name = {"h3": "H3", "a4": "A4"}[subgroup.lower()]
    sub = coxeter_group(name)
    grp = icosian_group()
    n, mul, conj, neg, pos = grp.tables()
    reps = [encode(g, grp) for g in coset_reps()]
    seen = set()
    for g in reps:
        for h in sub.codes:
            seen.add(_pykernel.compose_code(h, g, n, mul, conj, neg, pos))
    if len(seen) != 14400 or len(reps) != 120:
        raise RuntimeError(f"[I, 1] does not give right coset representatives for W({name})")
    return True


# -- helpers -----------------------------------------------------------------
def _map(fn, items, jobs: int):
    if jobs and jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=chunk))
    return [fn(x) for x in items]


def _scalar_key(x: GoldenScalar):
    return (float(x), x.numerators, x.denominator)


def _weight_key(w):
    return tuple(_scalar_key(a) for a in w)


def _seed(weight) -> WeightVector:
    w = weight if isinstance(weight, WeightVector) else WeightVector("H4", weight)
    if w.system != "H4":
        raise ValueError("branching starts from an H4 weight")
    return w


def _labels_from_omega(x, vs, den):
    """Dynkin labels <v_j, x> for kernel rows vs, as GoldenScalars."""
    out = []
    for v in vs:
        sa, sb = _pykernel._pair(v, x)
        out.append(GoldenScalar.from_zt(sa, sb, den))
    return tuple(out)


def _h3_job(args):
    p_idx, lam = args
    p = icosian_group().elements[p_idx]
    h4 = build_system("H4")
    h3 = build_system("H3")
    x = p * lam
    omega = tuple(q_dot(x, a) for a in h4.roots)
    b4 = q_dot(x, h4.weights[3]) / h4.weights[3].norm()
    flat, den = to_zt(omega)
    us, vs = h3.reflections
    red, _ = _kernel.reduce_dominant(flat, us, vs)
    triple = tuple(from_zt(red, den)[:3])
    return triple, b4, red, den


def _a4_job(args):
    p_idx, lam = args
    p = icosian_group().elements[p_idx]
    h4 = build_system("H4")
    a4 = build_system("A4")
    x = p * lam
    omega = tuple(q_dot(x, a) for a in h4.roots)
    flat, den = to_zt(omega)
    us, vs = a4.reflections
    red, _ = _kernel.reduce_dominant(flat, us, vs)
    return _labels_from_omega(red, vs, den), red, den


def _height_sort(terms):
    def cmp(s, t):
        a, b = abs(s.height), abs(t.height)
        c = b._cmp(a)
        if c:
            return c
        c = t.height._cmp(s.height)
        if c:
            return c
        return (_weight_key(s.weight) > _weight_key(t.weight)) - (_weight_key(s.weight) < _weight_key(t.weight))

    return sorted(terms, key=functools.cmp_to_key(cmp))


def _partition_check(groups, reflections, full_points, full_den):
    """Expand each labelled representative to its subgroup orbit; check the orbits tile the full orbit.

    Returns {label: (number of distinct sub-orbits, sub-orbit size)}.
    """
    us, vs = reflections
    covered = set()
    info = {}
    total = 0
    for label, reps in groups.items():
        orbits = set()
        size = 0
        for red, den in reps:
            pts, _, _ = _kernel.orbit_bfs(red, us, vs, 0)
            scaled = frozenset(_rescale(p, den, full_den) for p in pts)
            orbits.add(scaled)
            size = len(pts)
        for o in orbits:
            covered |= o
            total += len(o)
        info[label] = (len(orbits), size)
    if total != len(full_points) or covered != set(full_points):
        raise RuntimeError("subgroup orbits do not tile the full orbit")
    return info


def _rescale(p, den, target):
    if den == target:
        return tuple(p)
    # both denominators come from the same seed, so they agree in practice
    out = []
    for v in p:
        num = v * target
        if num % den:
            raise RuntimeError("inconsistent coordinate denominators")
        out.append(num // den)
    return tuple(out)


# -- H3 ----------------------------------------------------------------------
def branch_h3(weight, jobs: int = 1) -> BranchTable:
    w = _seed(weight)
    verify_coset_reps("h3")
    lam = w.quaternion
    results = _map(_h3_job, [(k, lam) for k in range(120)], jobs)
    groups: dict = {}
    hits: dict = {}
    for triple, b4, red, den in results:
        key = (triple, b4)
        groups.setdefault(key, []).append((red, den))
        hits[key] = hits.get(key, 0) + 1
    poly = orbit("H4", w)
    info = _partition_check(groups, build_system("H3").reflections, poly.points, poly.denominator)
    terms = [BranchTerm(k[0], k[1], info[k][0], info[k][1], hits[k]) for k in groups]
    terms = _height_sort(terms)
    return BranchTable(w.coeffs, "h3", terms, poly.size)


def h3_shell_identity(table: BranchTable) -> bool:
    """|v-part|^2 + b4^2 |omega_4|^2 = |Λ|^2 for every term."""
    h4 = build_system("H4")
    h3 = build_system("H3")
    lam = WeightVector("H4", table.seed).quaternion
    target = lam.norm()
    w4 = h4.weights[3]
    n4 = w4.norm()
    for t in table.terms:
        v = h3.weight(t.weight)
        if not q_dot(v, w4).is_zero:
            return False
        if v.norm() + t.height * t.height * n4 != target:
            return False
    return True


def h3_mirror_symmetric(table: BranchTable) -> bool:
    ms = table.multiset()
    return all(ms.get((wt, -h)) == m for (wt, h), m in ms.items())


# -- A4 ----------------------------------------------------------------------
def branch_a4(weight, jobs: int = 1) -> BranchTable:
    w = _seed(weight)
    verify_coset_reps("a4")
    lam = w.quaternion
    results = _map(_a4_job, [(k, lam) for k in range(120)], jobs)
    groups: dict = {}
    hits: dict = {}
    for labels, red, den in results:
        groups.setdefault(labels, []).append((red, den))
        hits[labels] = hits.get(labels, 0) + 1
    poly = orbit("H4", w)
    info = _partition_check(groups, build_system("A4").reflections, poly.points, poly.denominator)
    terms = [BranchTerm(k, None, info[k][0], info[k][1], hits[k]) for k in groups]
    terms.sort(key=lambda t: tuple(-x for x in (_weight_key(t.weight)[i][0] for i in range(4))))
    table = BranchTable(w.coeffs, "a4", terms, poly.size)
    table.extras["gamma_symmetric"] = a4_gamma_symmetric(table)
    if not table.extras["gamma_symmetric"]:
        raise RuntimeError("A4 branch table is not symmetric under the diagram flip")
    return table


def a4_gamma_symmetric(table: BranchTable) -> bool:
    ms = table.multiset()
    return all(ms.get((tuple(reversed(wt)), h)) == m for (wt, h), m in ms.items())


# -- A4 -> A3 ----------------------------------------------------------------
def branch_a4_to_a3(weight) -> list[tuple[tuple, GoldenScalar]]:
    """Closed-form split of the W(A4) orbit of (a1, a2, a3, a4) into W(A3) orbits.

    A3 is generated by the first three A4 reflections. The height of a term is
    -5 (x, v4) for any x in it, i.e. minus the sum of (C^-1)_{i4}-weighted labels
    times five. Equal (weight, height) pairs (which occur when a label vanishes)
    are the same sub-orbit and are listed once.
    """
    a1, a2, a3, a4 = (w if isinstance(w, GoldenScalar) else GoldenScalar(w) for w in weight)
    if any(x.sign() < 0 for x in (a1, a2, a3, a4)):
        raise ValueError("A4 weight must be dominant")
    if all(x.is_zero for x in (a1, a2, a3, a4)):
        return [((ZERO, ZERO, ZERO), ZERO)]
    terms = [
        ((a1, a2, a3), -(a1 + 2 * a2 + 3 * a3 + 4 * a4)),
        ((a1, a2, a3 + a4), -a1 - 2 * a2 - 3 * a3 + a4),
        ((a1, a2 + a3, a4), -a1 - 2 * a2 + 2 * a3 + a4),
        ((a1 + a2, a3, a4), -a1 + 3 * a2 + 2 * a3 + a4),
        ((a2, a3, a4), 4 * a1 + 3 * a2 + 2 * a3 + a4),
    ]
    out = []
    for t in terms:
        if t not in out:
            out.append(t)
    return out


def a3_split_geometric(weight) -> list:
    """The same split computed from the explicit W(A4) orbit.

    Every orbit point is reduced to its W(A3)-dominant form and tagged with
    the projection (x, v4). Returns the distinct (weight, projection) pairs.
    """
    a4 = build_system("A4")
    w = WeightVector("A4", weight)
    us, vs = a4.reflections
    flat, den = to_zt(w.omega)
    pts, _, _ = _kernel.orbit_bfs(flat, us, vs, 0)
    cinv = a4.cartan_inverse
    seen = set()
    out = []
    for p in pts:
        red, _ = _kernel.reduce_dominant(p, us[:3], vs[:3])
        labels = _labels_from_omega(red, vs, den)
        proj = sum((labels[i] * cinv[i][3] for i in range(4)), ZERO)
        key = (labels[:3], proj)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def check_a3_split(weight) -> GoldenScalar | None:
    """Check the closed form against the explicit orbit; return the height/projection constant.

    The constant is fixed by the seed itself and must then map every
    geometric projection onto the closed-form height. None for the zero weight.
    """
    w = WeightVector("A4", weight)
    closed = branch_a4_to_a3(w.coeffs)
    if w.is_zero:
        return None
    geo = a3_split_geometric(w.coeffs)
    proj0 = q_dot(w.quaternion, build_system("A4").weights[3])
    if proj0.is_zero:
        raise RuntimeError("seed has no component along v4")
    const = closed[0][1] / proj0
    scaled = {(wt, const * p) for wt, p in geo}
    if scaled != set(closed) or len(geo) != len(closed):
        raise RuntimeError(f"closed-form A3 split disagrees with the orbit for {w.label()}")
    return const


def branch_h4_to_a3(weight, jobs: int = 1) -> BranchTable:
    """H4 orbit -> A4 orbits -> A3 orbits with heights."""
    a4_table = branch_a4(weight, jobs)
    a3_sizes = {}
    agg: dict = {}
    for t in a4_table.terms:
        for wt, h in branch_a4_to_a3(t.weight):
            agg[(wt, h)] = agg.get((wt, h), 0) + t.multiplicity
            if wt not in a3_sizes:
                a3_sizes[wt] = _a3_orbit_size(wt)
    terms = [BranchTerm(wt, h, m, a3_sizes[wt]) for (wt, h), m in agg.items()]
    terms = _height_sort(terms)
    return BranchTable(a4_table.seed, "a3", terms, a4_table.orbit_size)


def _a3_orbit_size(wt) -> int:
    if all(x.is_zero for x in wt):
        return 1
    a4 = build_system("A4")
    w = WeightVector("A4", tuple(wt) + (ZERO,))
    us, vs = a4.reflections
    flat, _ = to_zt(w.omega)
    return len(_kernel.orbit_bfs(flat, us[:3], vs[:3], 0)[0])


def branch(weight, subgroup: str, jobs: int = 1) -> BranchTable:
    sub = subgroup.lower()
    if sub == "h3":
        return branch_h3(weight, jobs)
    if sub == "a4":
        return branch_a4(weight, jobs)
    if sub == "a3":
        return branch_h4_to_a3(weight, jobs)
    raise ValueError(f"unknown subgroup {subgroup!r}; choose from {', '.join(SUBGROUPS)}")
