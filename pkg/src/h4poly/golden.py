"""Exact arithmetic in Q(tau, sqrt2).

A :class:`GoldenScalar` is ``a + b*t + c*r2 + d*t*r2`` with rational
``a, b, c, d``, where ``t`` is the golden ratio (1+sqrt5)/2 and ``r2`` is
sqrt2. Internally the four coefficients share one positive denominator and
the five integers are kept coprime, so equal values have equal
representations (and equal hashes).

Signs are decided algebraically: ``u + r2*v`` with ``u, v`` in Z[t] is
compared through ``u**2 - 2*v**2``, and ``a + b*t`` through
``(2a+b)**2 - 5*b**2``. No floating point is involved.
"""
from __future__ import annotations

import ast
import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GoldenScalar",
    "ZERO",
    "ONE",
    "TAU",
    "SIGMA",
    "SQRT2",
    "SQRT5",
    "parse_scalar",
    "zt_sign",
    "zt_mul",
]

_TAU_F = (1.0 + math.sqrt(5.0)) / 2.0
_SQRT2_F = math.sqrt(2.0)


def zt_mul(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """(a + b t)(c + d t) in Z[t], using t**2 = t + 1."""
    bd = b * d
    return a * c + bd, a * d + b * c + bd


def zt_sign(a: int, b: int) -> int:
    """Exact sign of a + b*t for integers a, b."""
    # a + b t = ((2a + b) + b sqrt5) / 2
    m = 2 * a + b
    if m >= 0 and b >= 0:
        return 0 if (m == 0 and b == 0) else 1
    if m <= 0 and b <= 0:
        return -1
    diff = m * m - 5 * b * b
    if m > 0:
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


def _zt2_sign(a: int, b: int, c: int, d: int) -> int:
    """Exact sign of (a + b t) + sqrt2 (c + d t)."""
    su = zt_sign(a, b)
    sv = zt_sign(c, d)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare u^2 with 2 v^2
    ua, ub = zt_mul(a, b, a, b)
    va, vb = zt_mul(c, d, c, d)
    s = zt_sign(ua - 2 * va, ub - 2 * vb)
    return su if s > 0 else -su


def _coerce_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact rational")


class GoldenScalar:
    """Element ``a + b*t + c*r2 + d*t*r2`` of Q(tau, sqrt2). Immutable."""

    __slots__ = ("_n", "_d", "_f")

    def __init__(self, a=0, b=0, c=0, d=0):
        fa, fb, fc, fd = (_coerce_rational(x) for x in (a, b, c, d))
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        nums = tuple(int(x.numerator * (den // x.denominator)) for x in (fa, fb, fc, fd))
        self._set(nums, den)

    def _set(self, nums, den):
        g = math.gcd(den, *nums)
        if g != 1:
            nums = tuple(x // g for x in nums)
            den //= g
        self._n = nums
        self._d = den
        self._f = None

    @classmethod
    def _raw(cls, nums, den) -> GoldenScalar:
        obj = object.__new__(cls)
        if den < 0:
            nums = tuple(-x for x in nums)
            den = -den
        obj._set(nums, den)
        return obj

    @classmethod
    def from_zt(cls, a: int, b: int, den: int = 1) -> GoldenScalar:
        """(a + b t) / den for integers."""
        return cls._raw((a, b, 0, 0), den)

    # -- accessors -------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._d)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._d)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._d)

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return self._n

    @property
    def denominator(self) -> int:
        return self._d

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c, self.d

    @property
    def is_zero(self) -> bool:
        return not any(self._n)

    @property
    def in_q_tau(self) -> bool:
        """True when the sqrt2 part vanishes."""
        return self._n[2] == 0 and self._n[3] == 0

    @property
    def is_rational(self) -> bool:
        return self._n[1] == 0 and self._n[2] == 0 and self._n[3] == 0

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _wrap(other):
        if isinstance(other, GoldenScalar):
            return other
        if isinstance(other, (int, Rational)):
            f = Fraction(other)
            return GoldenScalar._raw((f.numerator, 0, 0, 0), f.denominator)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GoldenScalar._raw(tuple(x + y for x, y in zip(self._n, o._n)), d1)
        return GoldenScalar._raw(
            tuple(x * d2 + y * d1 for x, y in zip(self._n, o._n)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(GoldenScalar)
        obj._n = tuple(-x for x in self._n)
        obj._d = self._d
        obj._f = None
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._n
        e, f, g, h = o._n
        # (u + r2 v)(u' + r2 v') = (u u' + 2 v v') + r2 (u v' + v u')
        p0, p1 = zt_mul(a, b, e, f)
        q0, q1 = zt_mul(c, d, g, h)
        s0, s1 = zt_mul(a, b, g, h)
        t0, t1 = zt_mul(c, d, e, f)
        return GoldenScalar._raw((p0 + 2 * q0, p1 + 2 * q1, s0 + t0, s1 + t1), self._d * o._d)

    __rmul__ = __mul__

    def galois(self) -> GoldenScalar:
        """Swap t and s = 1 - t; rationals and sqrt2 are fixed."""
        a, b, c, d = self._n
        return GoldenScalar._raw((a + b, -b, c + d, -d), self._d)

    def sqrt2_conjugate(self) -> GoldenScalar:
        a, b, c, d = self._n
        return GoldenScalar._raw((a, b, -c, -d), self._d)

    def inverse(self) -> GoldenScalar:
        if self.is_zero:
            raise ZeroDivisionError("GoldenScalar division by zero")
        # 1/(u + r2 v) = (u - r2 v) / (u^2 - 2 v^2); then invert in Q(t)
        conj2 = self.sqrt2_conjugate()
        w = self * conj2  # lies in Q(t)
        wa, wb = w._n[0], w._n[1]
        # 1/(wa + wb t) = (wa + wb - wb t) / (wa^2 + wa wb - wb^2)
        norm = wa * wa + wa * wb - wb * wb
        inv_w = GoldenScalar._raw(((wa + wb) * w._d, -wb * w._d, 0, 0), norm)
        return conj2 * inv_w

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def sign(self) -> int:
        """-1, 0 or +1 under t = 1.618..., r2 = 1.414..."""
        return _zt2_sign(*self._n)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        if self._d == 1 and not any(self._n[1:]):
            return hash(self._n[0])
        return hash((self._n, self._d))

    def _cmp(self, other) -> int:
        o = self._wrap(other)
        if o is None:
            raise TypeError(f"cannot compare GoldenScalar with {type(other).__name__}")
        if self._n == o._n and self._d == o._d:
            return 0
        d = self - o
        a, b, c, e = d._n
        est = float(d)
        # rounding error of float() is a few ulps of the coefficient magnitudes
        mag = (abs(a) + abs(b) * _TAU_F + _SQRT2_F * (abs(c) + abs(e) * _TAU_F)) / d._d
        if abs(est) > 1e-12 * mag:
            return 1 if est > 0 else -1
        return d.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return not self.is_zero

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversion ------------------------------------------------------
    def __float__(self) -> float:
        if self._f is None:
            a, b, c, d = self._n
            den = self._d
            # int / int true division stays accurate for large numerators
            u = a / den + (b / den) * _TAU_F
            v = c / den + (d / den) * _TAU_F
            self._f = u + _SQRT2_F * v
        return self._f

    def to_float(self) -> float:
        return float(self)

    def to_literal(self) -> str:
        """Scalar literal understood by :func:`parse_scalar`."""
        parts = []
        for coeff, unit in zip(self.coefficients(), ("", "t", "r2", "t*r2")):
            if coeff == 0:
                continue
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if unit == "":
                body = str(mag)
            elif mag == 1:
                body = unit
            else:
                body = f"{mag}*{unit}"
            parts.append(("-" if neg else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        return f"GoldenScalar({self.to_literal()!r})"

    def __reduce__(self):
        return (GoldenScalar, (self.a, self.b, self.c, self.d))

    @classmethod
    def parse(cls, text: str) -> GoldenScalar:
        return parse_scalar(text)


ZERO = GoldenScalar()
ONE = GoldenScalar(1)
TAU = GoldenScalar(0, 1)
SIGMA = GoldenScalar(1, -1)
SQRT2 = GoldenScalar(0, 0, 1)
SQRT5 = GoldenScalar(-1, 2)

_NAMES = {
    "t": TAU,
    "tau": TAU,
    "s": SIGMA,
    "sigma": SIGMA,
    "r2": SQRT2,
    "r5": SQRT5,
}

_NUMBER = re.compile(r"^\d+(\.\d+)?$")


def parse_scalar(text: str) -> GoldenScalar:
    """Parse a scalar literal such as ``2/(3*t)``, ``s``, ``1/2*r2``.

    Names: ``t`` (tau), ``s`` (sigma = 1 - t), ``r2`` (sqrt2), ``r5`` (sqrt5).
    Operators: ``+ - * /``, parentheses, and integer powers via ``**`` or ``^``.
    """
    src = text.strip().replace("^", "**")
    if not src:
        raise ValueError("empty scalar literal")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError(f"only integer powers allowed in {text!r}")
                return left ** node.right.value
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        elif isinstance(node, ast.UnaryOp):
            val = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -val
            if isinstance(node.op, ast.UAdd):
                return val
        elif isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            seg = ast.get_source_segment(src, node)
            if seg is None or not _NUMBER.match(seg):
                raise ValueError(f"bad number in {text!r}")
            return GoldenScalar(Fraction(seg))
        elif isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        raise ValueError(f"unsupported syntax in scalar literal {text!r}")

    return ev(tree)
