"""Pure-Python hot loops. Reference implementation for the compiled kernel.

Vectors are flat tuples ``(a0, b0, a1, b1, ...)`` meaning ``a_k + b_k t`` in
Z[t] (any common denominator is kept by the caller). A reflection is a pair
``(u, v)`` of such tuples acting as ``x -> x - <v, x> u`` where ``<v, x>`` is
the Z[t]-bilinear pairing sum_k v_k x_k.

Group elements of [I, I] + [I, I]* are integer codes
``star * n*n + i * n + j`` for the pair of quaternion indices (i, j).
"""
from __future__ import annotations

from collections import deque

from .errors import CapExceeded

IMPLEMENTATION = "python"


def zt_sign(a: int, b: int) -> int:
    m = 2 * a + b
    if m >= 0 and b >= 0:
        return 0 if (m == 0 and b == 0) else 1
    if m <= 0 and b <= 0:
        return -1
    diff = m * m - 5 * b * b
    if m > 0:
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


def _pair(v, x):
    sa = 0
    sb = 0
    for k in range(0, len(x), 2):
        va = v[k]
        vb = v[k + 1]
        if va == 0 and vb == 0:
            continue
        xa = x[k]
        xb = x[k + 1]
        bd = vb * xb
        sa += va * xa + bd
        sb += va * xb + vb * xa + bd
    return sa, sb


def _apply(x, u, sa, sb):
    out = list(x)
    for k in range(0, len(x), 2):
        ua = u[k]
        ub = u[k + 1]
        bd = ub * sb
        out[k] -= ua * sa + bd
        out[k + 1] -= ua * sb + ub * sa + bd
    return tuple(out)


def reflect_vec(x, u, v):
    sa, sb = _pair(v, x)
    if sa == 0 and sb == 0:
        return tuple(x)
    return _apply(x, u, sa, sb)


def orbit_bfs(seed, us, vs, cap=0):
    """Breadth-first orbit of ``seed`` under the reflections.

    Returns ``(points, parents, gens)``: ``points[k]`` was reached from
    ``points[parents[k]]`` by reflection ``gens[k]`` (-1 for the seed).
    """
    seed = tuple(seed)
    index = {seed: 0}
    points = [seed]
    parents = [-1]
    gens = [-1]
    refl = list(zip(us, vs))
    head = 0
    while head < len(points):
        x = points[head]
        for g, (u, v) in enumerate(refl):
            sa, sb = _pair(v, x)
            if sa == 0 and sb == 0:
                continue
            y = _apply(x, u, sa, sb)
            if y not in index:
                index[y] = len(points)
                points.append(y)
                parents.append(head)
                gens.append(g)
                if cap and len(points) > cap:
                    raise CapExceeded(f"orbit exceeds cap {cap}")
        head += 1
    return points, parents, gens


def reduce_dominant(x, us, vs, max_steps=100000):
    """Reflect while some pairing <v_k, x> is negative.

    Returns the dominant vector and the list of reflection indices applied
    (in order of application).
    """
    x = tuple(x)
    word = []
    refl = list(zip(us, vs))
    for _ in range(max_steps):
        for g, (u, v) in enumerate(refl):
            sa, sb = _pair(v, x)
            if zt_sign(sa, sb) < 0:
                x = _apply(x, u, sa, sb)
                word.append(g)
                break
        else:
            return x, word
    raise RuntimeError("dominant reduction did not terminate")


def compose_code(g, h, n, mul, conj, neg, pos):
    nn = n * n
    gs, rest = divmod(g, nn)
    gp, gq = divmod(rest, n)
    hs, rest = divmod(h, nn)
    hp, hq = divmod(rest, n)
    if gs == 0:
        p = mul[gp * n + hp]
        q = mul[hq * n + gq]
        s = hs
    else:
        p = mul[gp * n + conj[hq]]
        q = mul[conj[hp] * n + gq]
        s = 1 - hs
    if not pos[p]:
        p = neg[p]
        q = neg[q]
    return s * nn + p * n + q


def closure(gens, n, mul, conj, neg, pos, identity, cap=30000):
    """All products of the generator codes, in breadth-first order."""
    seen = {identity}
    out = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose_code(g, s, n, mul, conj, neg, pos)
            if h not in seen:
                seen.add(h)
                out.append(h)
                queue.append(h)
                if len(out) > cap:
                    raise CapExceeded(f"group closure exceeds cap {cap}")
    return out
