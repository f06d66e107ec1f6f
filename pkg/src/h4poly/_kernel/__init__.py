"""Hot loops: compiled extension when available, pure Python otherwise.

The compiled module is picked at import unless ``H4POLY_PURE_PYTHON`` is set
to a non-empty value. Calls that leave the compiled kernel's int64 range are
rerun in pure Python, so results never depend on which backend ran.
"""
from __future__ import annotations

import os

from . import _pykernel
from .errors import CapExceeded, RangeExceeded

_fast = None
if not os.environ.get("H4POLY_PURE_PYTHON"):
    try:
        from . import _ckernel as _fast
    except ImportError:  # extension not built
        _fast = None

BACKEND = _fast.IMPLEMENTATION if _fast is not None else _pykernel.IMPLEMENTATION

__all__ = [
    "BACKEND",
    "CapExceeded",
    "RangeExceeded",
    "backends",
    "closure",
    "orbit_bfs",
    "reduce_dominant",
    "zt_sign",
]


def backends() -> dict:
    """Available implementations by name (for benchmarks and parity tests)."""
    out = {"python": _pykernel}
    if _fast is not None:
        out[_fast.IMPLEMENTATION] = _fast
    return out


def orbit_bfs(seed, us, vs, cap=0):
    if _fast is not None:
        try:
            return _fast.orbit_bfs(seed, us, vs, cap)
        except RangeExceeded:
            pass
    return _pykernel.orbit_bfs(seed, us, vs, cap)


def reduce_dominant(x, us, vs):
    if _fast is not None:
        try:
            return _fast.reduce_dominant(x, us, vs)
        except RangeExceeded:
            pass
    return _pykernel.reduce_dominant(x, us, vs)


def closure(gens, n, mul, conj, neg, pos, identity, cap=30000):
    impl = _fast if _fast is not None else _pykernel
    return impl.closure(gens, n, mul, conj, neg, pos, identity, cap)


def zt_sign(a: int, b: int) -> int:
    return _pykernel.zt_sign(a, b)
