"""Quaternions over Q(tau, sqrt2) and the O(4) actions r -> p r q, r -> p conj(r) q."""
from __future__ import annotations

from .golden import GoldenScalar, parse_scalar

__all__ = ["Quaternion", "q_mul", "q_conj", "q_norm", "q_dot", "reflect", "E0", "E1", "E2", "E3"]


def _gs(x) -> GoldenScalar:
    if isinstance(x, GoldenScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return GoldenScalar(x)


class Quaternion:
    """q0 + q1 e1 + q2 e2 + q3 e3 with GoldenScalar components."""

    __slots__ = ("q0", "q1", "q2", "q3", "_h")

    def __init__(self, q0=0, q1=0, q2=0, q3=0):
        self.q0 = _gs(q0)
        self.q1 = _gs(q1)
        self.q2 = _gs(q2)
        self.q3 = _gs(q3)
        self._h = None

    @classmethod
    def _of(cls, a, b, c, d) -> Quaternion:
        obj = object.__new__(cls)
        obj.q0, obj.q1, obj.q2, obj.q3 = a, b, c, d
        obj._h = None
        return obj

    @property
    def components(self) -> tuple[GoldenScalar, GoldenScalar, GoldenScalar, GoldenScalar]:
        return (self.q0, self.q1, self.q2, self.q3)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    # -- algebra ---------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.q0, self.q1, self.q2, self.q3
            b0, b1, b2, b3 = other.q0, other.q1, other.q2, other.q3
            return Quaternion._of(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
                a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
            )
        s = GoldenScalar._wrap(other)
        if s is None:
            return NotImplemented
        return Quaternion._of(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)

    def __rmul__(self, other):
        s = GoldenScalar._wrap(other)
        if s is None:
            return NotImplemented
        return Quaternion._of(s * self.q0, s * self.q1, s * self.q2, s * self.q3)

    def __truediv__(self, other):
        s = GoldenScalar._wrap(other)
        if s is None:
            return NotImplemented
        inv = s.inverse()
        return self * inv

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion._of(self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion._of(self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self):
        return Quaternion._of(-self.q0, -self.q1, -self.q2, -self.q3)

    def conj(self) -> Quaternion:
        return Quaternion._of(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> GoldenScalar:
        """q times its conjugate (a real number: the squared length)."""
        return self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    def dot(self, other: Quaternion) -> GoldenScalar:
        return self.q0 * other.q0 + self.q1 * other.q1 + self.q2 * other.q2 + self.q3 * other.q3

    def galois(self) -> Quaternion:
        return Quaternion._of(*(x.galois() for x in self.components))

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.components)

    @property
    def is_imaginary(self) -> bool:
        return self.q0.is_zero

    # -- identity --------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.components)
        return self._h

    def __lt__(self, other):
        for x, y in zip(self.components, other.components):
            c = x._cmp(y)
            if c:
                return c < 0
        return False

    def to_floats(self) -> tuple[float, float, float, float]:
        return tuple(float(x) for x in self.components)

    def to_json(self) -> list[str]:
        return [x.to_literal() for x in self.components]

    @classmethod
    def from_json(cls, data) -> Quaternion:
        if len(data) != 4:
            raise ValueError("a quaternion needs four scalar literals")
        return cls(*(parse_scalar(str(x)) for x in data))

    def __repr__(self):
        return "Quaternion(" + ", ".join(repr(x.to_literal()) for x in self.components) + ")"


E0 = Quaternion(1)
E1 = Quaternion(0, 1)
E2 = Quaternion(0, 0, 1)
E3 = Quaternion(0, 0, 0, 1)


def q_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def q_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def q_norm(q: Quaternion) -> GoldenScalar:
    return q.norm()


def q_dot(p: Quaternion, q: Quaternion) -> GoldenScalar:
    return p.dot(q)


def reflect(normal: Quaternion, r: Quaternion) -> Quaternion:
    """Mirror r in the hyperplane orthogonal to ``normal``: r -> -n conj(r) n / |n|^2."""
    n2 = normal.norm()
    if n2.is_zero:
        raise ValueError("reflection normal must be nonzero")
    return -(normal * r.conj() * normal) / n2
