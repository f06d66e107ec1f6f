"""Finite groups of unit quaternions: T, T', O, I, S (the snub set) and I~."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .golden import ONE, SIGMA, TAU, ZERO, GoldenScalar
from .quaternion import Quaternion

__all__ = [
    "QuaternionSet",
    "IndexedGroup",
    "build_set",
    "canonical_sort",
    "conjugacy_classes",
    "icosian_group",
    "element_order",
    "SET_NAMES",
]

SET_NAMES = ("T", "Tprime", "O", "I", "S", "Itilde")
_SIZES = {"T": 24, "Tprime": 24, "O": 48, "I": 120, "S": 96, "Itilde": 120}
HALF = GoldenScalar(1, 0) / 2


def _qcmp(p: Quaternion, q: Quaternion) -> int:
    for x, y in zip(p.components, q.components):
        c = x._cmp(y)
        if c:
            return c
    return 0


def canonical_sort(elems) -> list[Quaternion]:
    """Deduplicate and sort lexicographically on (q0, q1, q2, q3)."""
    return sorted(set(elems), key=functools.cmp_to_key(_qcmp))


@dataclass(frozen=True)
class QuaternionSet:
    name: str
    elements: tuple = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, q):
        return q in self._lookup

    @functools.cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.elements)

    def is_closed(self) -> bool:
        """Brute-force check that every product of two elements stays in the set."""
        look = self._lookup
        return all(p * q in look for p in self.elements for q in self.elements)


def _signed(template):
    """All sign choices of the nonzero slots of a template 4-tuple of scalars."""
    slots = [k for k, x in enumerate(template) if not x.is_zero]
    out = []
    for signs in itertools.product((1, -1), repeat=len(slots)):
        comps = list(template)
        for k, s in zip(slots, signs):
            comps[k] = comps[k] * s
        out.append(Quaternion(*comps))
    return out


def _cyclic_templates(scalar, pairs):
    """1/2 (scalar +- x e_i +- y e_j ...) in the cyclic pattern used for I."""
    res = []
    for terms in pairs:
        comps = [scalar * HALF, ZERO, ZERO, ZERO]
        for coeff, axis in terms:
            comps[axis] = coeff * HALF
        res.append(tuple(comps))
    return res


def _tetrahedral():
    out = []
    for k in range(4):
        comps = [ZERO] * 4
        comps[k] = ONE
        out += _signed(comps)
    out += _signed((HALF, HALF, HALF, HALF))
    return out


def _tetrahedral_prime():
    r = ONE / GoldenScalar(0, 0, 1)  # 1/sqrt2
    out = []
    for i, j in itertools.combinations(range(4), 2):
        comps = [ZERO] * 4
        comps[i] = r
        comps[j] = r
        out += _signed(comps)
    return out


def _snub():
    t, s = TAU, SIGMA
    rows = []
    # 1/2 (+-t +- e_i +- s e_k) with (i, k) = (1,3), (2,1), (3,2)
    for i, k in ((1, 3), (2, 1), (3, 2)):
        rows += _cyclic_templates(t, [((ONE, i), (s, k))])
    for i, k in ((1, 2), (2, 3), (3, 1)):
        rows += _cyclic_templates(s, [((ONE, i), (t, k))])
    for i, k in ((1, 2), (2, 3), (3, 1)):
        rows += _cyclic_templates(ONE, [((t, i), (s, k))])
    # purely imaginary: 1/2 (+- s e_i +- t e_j +- e_k)
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        comps = [ZERO] * 4
        comps[i] = s * HALF
        comps[j] = t * HALF
        comps[k] = HALF
        rows.append(tuple(comps))
    out = []
    for row in rows:
        out += _signed(row)
    return out


def _closure(gens, limit):
    elems = {ONE_Q}
    frontier = [ONE_Q]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
                    if len(elems) > limit:
                        raise RuntimeError("quaternion closure exceeds its expected size")
        frontier = nxt
    return elems


ONE_Q = Quaternion(1)
GEN_B = Quaternion(TAU * HALF, SIGMA * HALF, HALF, 0)
GEN_C = Quaternion(TAU * HALF, -SIGMA * HALF, HALF, 0)


@functools.lru_cache(maxsize=None)
def build_set(name: str) -> QuaternionSet:
    if name not in _SIZES:
        raise ValueError(f"unknown quaternion set {name!r}; choose from {', '.join(SET_NAMES)}")
    if name == "T":
        elems = _tetrahedral()
    elif name == "Tprime":
        elems = _tetrahedral_prime()
    elif name == "O":
        elems = list(build_set("T")) + list(build_set("Tprime"))
    elif name == "S":
        elems = _snub()
    elif name == "I":
        generated = _closure([GEN_B, GEN_C], 120)
        union = set(build_set("T")) | set(build_set("S"))
        if generated != union or len(build_set("T")) + len(build_set("S")) != len(union):
            raise RuntimeError("closure of b, c does not match the union of T and S")
        elems = generated
    else:  # Itilde
        elems = [q.galois() for q in build_set("I")]
    ordered = canonical_sort(elems)
    if len(ordered) != _SIZES[name]:
        raise RuntimeError(f"{name} has {len(ordered)} elements, expected {_SIZES[name]}")
    for q in ordered:
        if q.norm() != ONE:
            raise RuntimeError(f"{name} contains a non-unit quaternion {q!r}")
    return QuaternionSet(name, tuple(ordered))


def element_order(q: Quaternion) -> int:
    x = q
    k = 1
    while x != ONE_Q:
        x = x * q
        k += 1
        if k > 1000:
            raise ValueError("element has no finite order")
    return k


# Order of the classes in the published table, keyed by scalar part.
_CLASS_ORDER = [
    ("1", ONE), ("2", -ONE),
    ("12+", TAU * HALF), ("12-", -TAU * HALF),
    ("12'+", SIGMA * HALF), ("12'-", -SIGMA * HALF),
    ("20+", HALF), ("20-", -HALF),
    ("30", ZERO),
]


def conjugacy_classes(group: QuaternionSet) -> list[dict]:
    """Classes under g -> x g conj(x). Each entry: label, size, order, representative, members."""
    elems = group.elements
    seen = set()
    classes = []
    for g in elems:
        if g in seen:
            continue
        members = canonical_sort(x * g * x.conj() for x in elems)
        seen.update(members)
        classes.append(members)
    out = []
    for members in classes:
        rep = members[-1]
        label = None
        for name, scalar in _CLASS_ORDER:
            if rep.q0 == scalar and len(members) in (1, 12, 20, 30):
                label = name
                break
        out.append({
            "label": label,
            "size": len(members),
            "order": element_order(rep),
            "representative": rep,
            "members": members,
        })
    rank = {name: k for k, (name, _) in enumerate(_CLASS_ORDER)}
    out.sort(key=lambda c: (rank.get(c["label"], len(rank)), c["size"]))
    return out


class IndexedGroup:
    """Index tables for a finite quaternion group (used by the integer kernels).

    ``pos[i]`` is true when the first nonzero component of element i is
    positive; ``neg[i]`` is the index of -element i.
    """

    def __init__(self, qset: QuaternionSet):
        self.name = qset.name
        self.elements = list(qset.elements)
        self.n = len(self.elements)
        self.index = {q: i for i, q in enumerate(self.elements)}
        ints = _half_zt(self.elements)
        if ints is not None:
            key = {v: i for i, v in enumerate(ints)}
            self.mul = [key[_half_zt_mul(p, q)] for p in ints for q in ints]
        else:
            self.mul = [self.index[p * q] for p in self.elements for q in self.elements]
        self.conj = [self.index[q.conj()] for q in self.elements]
        self.neg = [self.index[-q] for q in self.elements]
        self.pos = [_first_positive(q) for q in self.elements]
        self.identity = self.index[ONE_Q]

    def tables(self):
        return self.n, self.mul, self.conj, self.neg, self.pos

    def __len__(self):
        return self.n


def _half_zt(elems):
    """Components as 2x (a + b t) integer pairs, or None if some are not in (1/2) Z[t]."""
    out = []
    for q in elems:
        row = []
        for x in q.components:
            n = x.numerators
            if n[2] or n[3] or 2 % x.denominator:
                return None
            k = 2 // x.denominator
            row += [n[0] * k, n[1] * k]
        out.append(tuple(row))
    return out


def _half_zt_mul(p, q):
    """Hamilton product of two quaternions stored by :func:`_half_zt`."""
    def m(i, j):
        a, b, c, d = p[2 * i], p[2 * i + 1], q[2 * j], q[2 * j + 1]
        bd = b * d
        return a * c + bd, a * d + b * c + bd

    def comb(*terms):
        sa = sb = 0
        for sgn, (x, y) in terms:
            sa += sgn * x
            sb += sgn * y
        return sa // 2, sb // 2

    r0 = comb((1, m(0, 0)), (-1, m(1, 1)), (-1, m(2, 2)), (-1, m(3, 3)))
    r1 = comb((1, m(0, 1)), (1, m(1, 0)), (1, m(2, 3)), (-1, m(3, 2)))
    r2 = comb((1, m(0, 2)), (1, m(2, 0)), (1, m(3, 1)), (-1, m(1, 3)))
    r3 = comb((1, m(0, 3)), (1, m(3, 0)), (1, m(1, 2)), (-1, m(2, 1)))
    return r0 + r1 + r2 + r3


def _first_positive(q: Quaternion) -> bool:
    for x in q.components:
        s = x.sign()
        if s:
            return s > 0
    return False


@functools.lru_cache(maxsize=None)
def icosian_group() -> IndexedGroup:
    return IndexedGroup(build_set("I"))
