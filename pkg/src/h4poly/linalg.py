"""Exact small-matrix algebra over GoldenScalar."""
from __future__ import annotations

from .golden import ONE, ZERO, GoldenScalar

__all__ = ["identity", "mat_mul", "mat_inverse", "rank", "solve"]


def _gs(x):
    return x if isinstance(x, GoldenScalar) else GoldenScalar(x)


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    m = len(b[0])
    return [[sum((row[k] * b[k][j] for k in range(len(b))), ZERO) for j in range(m)] for row in a]


def _eliminate(rows, ncols):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def mat_inverse(a):
    n = len(a)
    rows = [[_gs(x) for x in row] + idrow for row, idrow in zip(a, identity(n))]
    piv = _eliminate(rows, n)
    if len(piv) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


def solve(a, b):
    """x with a x = b for square nonsingular a."""
    inv = mat_inverse(a)
    return [sum((inv[i][k] * _gs(b[k]) for k in range(len(b))), ZERO) for i in range(len(b))]


def rank(vectors) -> int:
    rows = [[_gs(x) for x in v] for v in vectors]
    if not rows:
        return 0
    return len(_eliminate(rows, len(rows[0])))
