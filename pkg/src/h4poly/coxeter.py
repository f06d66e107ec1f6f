"""Simple roots, Cartan data, weights, reflection generators and group closure.

Every vector of the construction lives in the four-space spanned by the H4
roots. Integer kernels work in H4 weight coordinates ``x_j = (X, alpha_j)``
so that ``X = sum_j x_j omega_j``; all coordinates there lie in Q(t).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import _kernel
from .golden import ONE, ZERO, GoldenScalar, parse_scalar
from .linalg import mat_inverse
from .qgroups import IndexedGroup, icosian_group
from .quaternion import Quaternion, q_dot

__all__ = [
    "GroupElement",
    "CoxeterSystem",
    "FiniteGroup",
    "build_system",
    "compose",
    "apply",
    "generate",
    "build_aut_a4",
    "weight_coords",
    "omega_coords",
    "from_omega_coords",
    "to_zt",
    "from_zt",
    "reflection_data",
    "SYSTEM_NAMES",
    "W_H4_ORDER",
]

SYSTEM_NAMES = ("H4", "H3", "A4", "A3")
W_H4_ORDER = 14400
R2 = GoldenScalar(0, 0, 1)
HALF = ONE / 2


def _q(*parts) -> Quaternion:
    return Quaternion(*(parse_scalar(p) if isinstance(p, str) else p for p in parts))


# -- group elements ----------------------------------------------------------
class GroupElement:
    """[p, q]: r -> p r q, or [p, q]*: r -> p conj(r) q, for unit quaternions p, q.

    The pair is stored up to the common sign: the first nonzero component of p
    is made positive.
    """

    __slots__ = ("star", "p", "q", "_h")

    def __init__(self, p: Quaternion, q: Quaternion, star: bool = False, check: bool = True):
        if check and (p.norm() != ONE or q.norm() != ONE):
            raise ValueError("group elements need unit quaternions")
        for x in p.components:
            s = x.sign()
            if s:
                if s < 0:
                    p, q = -p, -q
                break
        self.star = bool(star)
        self.p = p
        self.q = q
        self._h = None

    @property
    def kind(self) -> str:
        return "star" if self.star else "plain"

    def __call__(self, r: Quaternion) -> Quaternion:
        return apply(self, r)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.star == other.star and self.p == other.p and self.q == other.q

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.star, self.p, self.q))
        return self._h

    def inverse(self) -> GroupElement:
        if self.star:
            return GroupElement(self.q, self.p, True, check=False)
        return GroupElement(self.p.conj(), self.q.conj(), False, check=False)

    def __repr__(self):
        tail = "*" if self.star else ""
        return f"[{self.p!r}, {self.q!r}]{tail}"

    def to_json(self):
        return {"kind": self.kind, "p": self.p.to_json(), "q": self.q.to_json()}


IDENTITY = GroupElement(Quaternion(1), Quaternion(1))


def apply(g: GroupElement, r: Quaternion) -> Quaternion:
    if g.star:
        return g.p * r.conj() * g.q
    return g.p * r * g.q


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element acting as g after h."""
    if not g.star:
        return GroupElement(g.p * h.p, h.q * g.q, h.star, check=False)
    return GroupElement(g.p * h.q.conj(), h.p.conj() * g.q, not h.star, check=False)


def reflection_element(root: Quaternion) -> GroupElement:
    """[n, -n]* with n the unit root: the mirror orthogonal to ``root``."""
    n2 = root.norm()
    if n2 == 2:
        n = root / R2
    elif n2 == 1:
        n = root
    else:
        raise ValueError("reflection generators are built from roots of norm 1 or 2")
    return GroupElement(n, -n, True)


# -- codes for [I, I] + [I, I]* ----------------------------------------------
def encode(g: GroupElement, grp: IndexedGroup | None = None) -> int | None:
    grp = grp or icosian_group()
    i = grp.index.get(g.p)
    j = grp.index.get(g.q)
    if i is None or j is None:
        return None
    n = grp.n
    return (n * n if g.star else 0) + i * n + j


def decode(code: int, grp: IndexedGroup | None = None) -> GroupElement:
    grp = grp or icosian_group()
    n = grp.n
    s, rest = divmod(code, n * n)
    i, j = divmod(rest, n)
    return GroupElement(grp.elements[i], grp.elements[j], bool(s), check=False)


# -- finite groups -----------------------------------------------------------
@dataclass
class FiniteGroup:
    """A closed set of group elements (codes into [I, I] + [I, I]* when possible)."""

    name: str
    generator_labels: tuple
    codes: list | None = None
    _elements: list | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.codes) if self.codes is not None else len(self._elements)

    def __len__(self):
        return self.order

    @functools.cached_property
    def code_set(self) -> frozenset:
        if self.codes is None:
            return frozenset(encode(g) for g in self._elements)
        return frozenset(self.codes)

    @property
    def elements(self) -> list:
        if self._elements is None:
            grp = icosian_group()
            self._elements = [decode(c, grp) for c in self.codes]
        return self._elements

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        if self.codes is not None:
            c = encode(g)
            return c is not None and c in self.code_set
        return g in set(self._elements)

    def issubset(self, other: FiniteGroup) -> bool:
        return self.code_set <= other.code_set


def generate(generators, expected_order: int | None = None, cap: int = 30000, name: str = "",
             labels=None) -> FiniteGroup:
    """Breadth-first closure of the generators under composition."""
    labels = tuple(labels) if labels is not None else tuple(f"g{k}" for k in range(len(generators)))
    grp = icosian_group()
    codes = [encode(g, grp) for g in generators]
    if all(c is not None for c in codes):
        n, mul, conj, neg, pos = grp.tables()
        ident = encode(IDENTITY, grp)
        out = _kernel.closure(codes, n, mul, conj, neg, pos, ident, cap)
        result = FiniteGroup(name, labels, codes=sorted(out))
    else:
        seen = {IDENTITY}
        queue = [IDENTITY]
        head = 0
        while head < len(queue):
            g = queue[head]
            head += 1
            for s in generators:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
                    if len(queue) > cap:
                        raise _kernel.CapExceeded(f"group closure exceeds cap {cap}")
        result = FiniteGroup(name, labels, _elements=queue)
    if expected_order is not None and result.order != expected_order:
        raise RuntimeError(f"group {name or labels} has order {result.order}, expected {expected_order}")
    return result


# -- Coxeter systems ---------------------------------------------------------
_H4_ROOTS = (
    ("0", "-r2", "0", "0"),
    ("0", "r2/2*t", "r2/2", "r2/2*s"),
    ("0", "0", "-r2", "0"),
    ("r2/2*s", "0", "r2/2", "r2/2*t"),
)
_H4_WEIGHTS = (
    ("-1/r2*t^4", "-1/r2", "0", "-1/r2*t^2"),
    ("-r2*t^3", "0", "0", "-r2*t"),
    ("-1/r2*t*(t+2)", "0", "-1/r2", "-1/r2*t"),
    ("-r2*t", "0", "0", "0"),
)
_A4_ROOTS = (
    ("-r2", "0", "0", "0"),
    ("r2/2", "r2/2", "r2/2", "r2/2"),
    ("0", "-r2", "0", "0"),
    ("0", "r2/2", "-r2/2*s", "-r2/2*t"),
)
_A4_WEIGHTS = (
    ("-r5/(r2*r5)", "0", "t/(r2*r5)", "-s/(r2*r5)"),
    ("0", "0", "2*t/(r2*r5)", "-2*s/(r2*r5)"),
    ("0", "-r5/(r2*r5)", "t^2/(r2*r5)", "-s^2/(r2*r5)"),
    ("0", "0", "2/(r2*r5)", "-2/(r2*r5)"),
)


@dataclass(frozen=True)
class CoxeterSystem:
    name: str
    roots: tuple
    cartan: tuple
    cartan_inverse: tuple
    weights: tuple
    generators: tuple
    axis: Quaternion | None = None
    root_labels: tuple = ()

    @property
    def rank(self) -> int:
        return len(self.roots)

    @functools.cached_property
    def reflections(self):
        """(us, vs) integer data for the kernel acting on H4 weight coordinates."""
        return reflection_data(self.roots)

    def weight(self, coeffs) -> Quaternion:
        """sum_i a_i w_i for coefficients in this system's weight basis."""
        if len(coeffs) != self.rank:
            raise ValueError(f"{self.name} weights need {self.rank} coefficients")
        out = Quaternion(0)
        for a, w in zip(coeffs, self.weights):
            a = a if isinstance(a, GoldenScalar) else GoldenScalar(a)
            if not a.is_zero:
                out = out + w * a
        return out


def _gram(a, b):
    return tuple(tuple(q_dot(x, y) for y in b) for x in a)


@functools.lru_cache(maxsize=None)
def build_system(name: str) -> CoxeterSystem:
    name = name.upper()
    if name not in SYSTEM_NAMES:
        raise ValueError(f"unknown Coxeter system {name!r}; choose from {', '.join(SYSTEM_NAMES)}")
    axis = None
    if name in ("H4", "H3", "A3"):
        h4_roots = tuple(_q(*r) for r in _H4_ROOTS)
        shipped = tuple(_q(*w) for w in _H4_WEIGHTS)
        if name == "H4":
            roots, labels = h4_roots, (1, 2, 3, 4)
        elif name == "H3":
            roots, labels = h4_roots[:3], (1, 2, 3)
            axis = shipped[3]
        else:
            roots, labels = h4_roots[1:], (2, 3, 4)
            axis = shipped[0]
    else:
        roots, labels = tuple(_q(*r) for r in _A4_ROOTS), (1, 2, 3, 4)
        shipped = tuple(_q(*w) for w in _A4_WEIGHTS)
    cartan = _gram(roots, roots)
    inv = tuple(tuple(row) for row in mat_inverse(cartan))
    weights = []
    for row in inv:
        w = Quaternion(0)
        for c, a in zip(row, roots):
            if not c.is_zero:
                w = w + a * c
        weights.append(w)
    weights = tuple(weights)
    if name in ("H4", "A4") and weights != shipped:
        raise RuntimeError(f"computed {name} weights differ from the shipped quaternions")
    for i, w in enumerate(weights):
        for j, a in enumerate(roots):
            if q_dot(w, a) != (ONE if i == j else ZERO):
                raise RuntimeError(f"{name}: weight/root duality fails at ({i}, {j})")
    gens = tuple(reflection_element(a) for a in roots)
    return CoxeterSystem(name, roots, cartan, inv, weights, gens, axis, labels)


# -- coordinates -------------------------------------------------------------
def weight_coords(system: CoxeterSystem | str, r: Quaternion) -> tuple:
    """Coefficients of r in the system's weight basis.

    For rank-3 systems the result has a fourth entry: the coefficient of the
    orthogonal axis (omega_4 for H3, omega_1 for A3).
    """
    if isinstance(system, str):
        system = build_system(system)
    coords = tuple(q_dot(r, a) for a in system.roots)
    if system.axis is not None:
        coords = coords + (q_dot(r, system.axis) / system.axis.norm(),)
    return coords


def omega_coords(r: Quaternion) -> tuple:
    return tuple(q_dot(r, a) for a in build_system("H4").roots)


def from_omega_coords(x) -> Quaternion:
    return build_system("H4").weight(x)


def to_zt(values) -> tuple[tuple, int]:
    """Flat Z[t] integer tuple and common denominator for Q(t) scalars."""
    den = 1
    for v in values:
        if not v.in_q_tau:
            raise ValueError(f"coordinate {v} is not in Q(t)")
        den = den * v.denominator // _gcd(den, v.denominator)
    out = []
    for v in values:
        k = den // v.denominator
        n = v.numerators
        out += [n[0] * k, n[1] * k]
    return tuple(out), den


def from_zt(flat, den: int = 1) -> tuple:
    return tuple(GoldenScalar.from_zt(flat[k], flat[k + 1], den) for k in range(0, len(flat), 2))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def reflection_data(roots) -> tuple[list, list]:
    """Kernel rows for reflections in ``roots`` (norm 2) acting on H4 weight coordinates."""
    h4 = build_system("H4")
    us, vs = [], []
    for b in roots:
        if b.norm() != 2:
            raise ValueError("kernel reflections need roots of norm 2")
        u, du = to_zt(tuple(q_dot(b, a) for a in h4.roots))
        v, dv = to_zt(tuple(q_dot(b, w) for w in h4.weights))
        if du != 1 or dv != 1:
            raise ValueError("root is not an integral combination of the H4 simple roots")
        us.append(u)
        vs.append(v)
    return us, vs


# -- named groups ------------------------------------------------------------
@functools.lru_cache(maxsize=None)
def coxeter_group(name: str, nodes: tuple | None = None) -> FiniteGroup:
    """W(system), or the parabolic subgroup on the given 1-based nodes."""
    system = build_system(name)
    idx = range(system.rank) if nodes is None else [k - 1 for k in nodes]
    gens = [system.generators[k] for k in idx]
    labels = tuple(f"r{system.root_labels[k]}" for k in idx)
    expected = {"H4": 14400, "H3": 120, "A4": 120, "A3": 24}.get(name.upper()) if nodes is None else None
    return generate(gens, expected, name=f"W({name.upper()})" if nodes is None else f"<{','.join(labels)}>",
                    labels=labels)


def gamma_element() -> GroupElement:
    """Diagram symmetry of A4 swapping alpha1 with alpha4 and alpha2 with alpha3."""
    a = _q("0", "-t/2", "1/2", "s/2")
    b = _q("0", "s/2", "-t/2", "-1/2")
    return GroupElement(a, b)


@functools.lru_cache(maxsize=None)
def build_aut_a4() -> FiniteGroup:
    a4 = build_system("A4")
    gens = list(a4.generators) + [gamma_element()]
    labels = tuple(f"r{k}" for k in a4.root_labels) + ("gamma",)
    group = generate(gens, 240, name="Aut(A4)", labels=labels)
    if not group.issubset(coxeter_group("H4")):
        raise RuntimeError("Aut(A4) is not contained in W(H4)")
    return group


# -- closed forms used as independent oracles --------------------------------
def closed_form_group(name: str) -> frozenset:
    """Code sets written directly from quaternion formulas (no reflections involved)."""
    grp = icosian_group()
    ii = grp.elements

    def code(p, q, star):
        return encode(GroupElement(p, q, star, check=False), grp)

    out = set()
    if name == "H4":
        for p in ii:
            for q in ii:
                out.add(code(p, q, False))
                out.add(code(p, q, True))
    elif name == "H3":
        for p in ii:
            out.add(code(p, p.conj(), False))
            out.add(code(p, p.conj(), True))
    elif name == "H3xA1":
        for p in ii:
            for s in (1, -1):
                out.add(code(p, p.conj() * s, False))
                out.add(code(p, p.conj() * s, True))
    elif name in ("A4", "AutA4"):
        c = _q("0", "0", "-1/r2", "1/r2")
        signs = (1,) if name == "A4" else (1, -1)
        for p in ii:
            pt = p.galois().conj()
            for s in signs:
                out.add(code(p, c.conj() * pt * c * s, False))
                out.add(code(p, c * pt * c * s, True))
    else:
        raise ValueError(name)
    return frozenset(out)
