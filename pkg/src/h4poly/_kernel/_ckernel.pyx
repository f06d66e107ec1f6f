# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; same API and results as ``_pykernel``.

Coordinates are int64. Inputs and every produced coordinate are kept below
2**28 in magnitude so that the exact sign test (which squares values) cannot
overflow; past that bound RangeExceeded is raised and the dispatcher
reruns the call in pure Python.
"""
from libc.stdlib cimport malloc, calloc, realloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport int64_t, uint64_t

from .errors import CapExceeded, RangeExceeded

IMPLEMENTATION = "cython"

cdef enum:
    LIMIT = 268435456  # 2**28


cdef inline int c_zt_sign(int64_t a, int64_t b) nogil:
    cdef int64_t m = 2 * a + b
    cdef int64_t diff
    if m >= 0 and b >= 0:
        return 0 if (m == 0 and b == 0) else 1
    if m <= 0 and b <= 0:
        return -1
    diff = m * m - 5 * b * b
    if m > 0:
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


def zt_sign(a, b):
    if abs(a) >= LIMIT or abs(b) >= LIMIT:
        from ._pykernel import zt_sign as slow
        return slow(a, b)
    return c_zt_sign(a, b)


cdef inline void c_pair(const int64_t* v, const int64_t* x, int dim, int64_t* sa, int64_t* sb) nogil:
    cdef int64_t a = 0, b = 0, bd
    cdef int k
    for k in range(0, dim, 2):
        if v[k] == 0 and v[k + 1] == 0:
            continue
        bd = v[k + 1] * x[k + 1]
        a += v[k] * x[k] + bd
        b += v[k] * x[k + 1] + v[k + 1] * x[k] + bd
    sa[0] = a
    sb[0] = b


cdef inline int c_apply(const int64_t* x, const int64_t* u, int dim, int64_t sa, int64_t sb, int64_t* out) nogil:
    """out = x - (sa + sb t) u; returns 1 on magnitude overflow."""
    cdef int k
    cdef int64_t bd, ya, yb
    for k in range(0, dim, 2):
        bd = u[k + 1] * sb
        ya = x[k] - (u[k] * sa + bd)
        yb = x[k + 1] - (u[k] * sb + u[k + 1] * sa + bd)
        if ya >= LIMIT or ya <= -LIMIT or yb >= LIMIT or yb <= -LIMIT:
            return 1
        out[k] = ya
        out[k + 1] = yb
    return 0


cdef inline uint64_t c_hash(const int64_t* x, int dim) nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int k
    for k in range(dim):
        h ^= <uint64_t>x[k]
        h *= 1099511628211ULL
        h ^= h >> 29
    return h


cdef int64_t* _load_rows(rows, int dim) except NULL:
    cdef int n = len(rows)
    cdef int64_t* buf = <int64_t*>malloc(max(1, n * dim) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int i, k
    for i in range(n):
        row = rows[i]
        if len(row) != dim:
            free(buf)
            raise ValueError("reflection data has the wrong length")
        for k in range(dim):
            val = row[k]
            if val >= 256 or val <= -256:
                free(buf)
                raise RangeExceeded("reflection coefficient too large for the compiled kernel")
            buf[i * dim + k] = val
    return buf


cdef class _PointTable:
    """Growable array of int64 vectors with an open-addressing index."""
    cdef int64_t* data
    cdef int64_t* slots
    cdef Py_ssize_t count, capacity, nslots
    cdef int dim

    def __cinit__(self, int dim):
        self.dim = dim
        self.capacity = 1024
        self.count = 0
        self.nslots = 4096
        self.data = <int64_t*>malloc(self.capacity * dim * sizeof(int64_t))
        self.slots = <int64_t*>malloc(self.nslots * sizeof(int64_t))
        if self.data == NULL or self.slots == NULL:
            raise MemoryError()
        memset(self.slots, 0xFF, self.nslots * sizeof(int64_t))

    def __dealloc__(self):
        free(self.data)
        free(self.slots)

    cdef int _grow_slots(self) except -1:
        cdef Py_ssize_t newn = self.nslots * 2
        cdef int64_t* ns = <int64_t*>malloc(newn * sizeof(int64_t))
        if ns == NULL:
            raise MemoryError()
        memset(ns, 0xFF, newn * sizeof(int64_t))
        cdef Py_ssize_t i, pos
        cdef uint64_t mask = newn - 1
        for i in range(self.count):
            pos = c_hash(self.data + i * self.dim, self.dim) & mask
            while ns[pos] != -1:
                pos = (pos + 1) & mask
            ns[pos] = i
        free(self.slots)
        self.slots = ns
        self.nslots = newn
        return 0

    cdef Py_ssize_t insert(self, const int64_t* x) except? -2:
        """Index of x; appends it if new (returns -1 - index for new entries)."""
        cdef uint64_t mask = self.nslots - 1
        cdef Py_ssize_t pos = c_hash(x, self.dim) & mask
        cdef int64_t idx
        cdef int k, same
        while True:
            idx = self.slots[pos]
            if idx == -1:
                break
            same = 1
            for k in range(self.dim):
                if self.data[idx * self.dim + k] != x[k]:
                    same = 0
                    break
            if same:
                return idx
            pos = (pos + 1) & mask
        if self.count == self.capacity:
            self.capacity *= 2
            self.data = <int64_t*>realloc(self.data, self.capacity * self.dim * sizeof(int64_t))
            if self.data == NULL:
                raise MemoryError()
        memcpy(self.data + self.count * self.dim, x, self.dim * sizeof(int64_t))
        self.slots[pos] = self.count
        self.count += 1
        if self.count * 2 > self.nslots:
            self._grow_slots()
        return -self.count  # -1 - (count - 1)

    cdef tuple row(self, Py_ssize_t i):
        cdef int k
        return tuple([self.data[i * self.dim + k] for k in range(self.dim)])


def orbit_bfs(seed, us, vs, cap=0):
    cdef int dim = len(seed)
    cdef int ngen = len(us)
    cdef int k, g, bad
    cdef int64_t sa, sb
    for val in seed:
        if val >= LIMIT or val <= -LIMIT:
            raise RangeExceeded("seed too large for the compiled kernel")
    cdef int64_t* U = _load_rows(us, dim)
    cdef int64_t* V
    try:
        V = _load_rows(vs, dim)
    except BaseException:
        free(U)
        raise
    cdef int64_t* x = <int64_t*>malloc(dim * sizeof(int64_t))
    cdef int64_t* y = <int64_t*>malloc(dim * sizeof(int64_t))
    cdef _PointTable table = _PointTable(dim)
    parents = [-1]
    gens = [-1]
    cdef Py_ssize_t head = 0, r
    try:
        for k in range(dim):
            x[k] = seed[k]
        table.insert(x)
        while head < table.count:
            memcpy(x, table.data + head * dim, dim * sizeof(int64_t))
            for g in range(ngen):
                c_pair(V + g * dim, x, dim, &sa, &sb)
                if sa == 0 and sb == 0:
                    continue
                bad = c_apply(x, U + g * dim, dim, sa, sb, y)
                if bad:
                    raise RangeExceeded("coordinate growth exceeds the compiled kernel range")
                r = table.insert(y)
                if r < 0:
                    parents.append(head)
                    gens.append(g)
                    if cap and table.count > cap:
                        raise CapExceeded(f"orbit exceeds cap {cap}")
            head += 1
        points = [table.row(r) for r in range(table.count)]
    finally:
        free(U)
        free(V)
        free(x)
        free(y)
    return points, parents, gens


def reduce_dominant(x0, us, vs, max_steps=100000):
    cdef int dim = len(x0)
    cdef int ngen = len(us)
    cdef int k, g, steps, moved
    cdef int64_t sa, sb
    for val in x0:
        if val >= LIMIT or val <= -LIMIT:
            raise RangeExceeded("vector too large for the compiled kernel")
    cdef int64_t* U = _load_rows(us, dim)
    cdef int64_t* V
    try:
        V = _load_rows(vs, dim)
    except BaseException:
        free(U)
        raise
    cdef int64_t* x = <int64_t*>malloc(dim * sizeof(int64_t))
    cdef int64_t* y = <int64_t*>malloc(dim * sizeof(int64_t))
    word = []
    try:
        for k in range(dim):
            x[k] = x0[k]
        for steps in range(max_steps):
            moved = 0
            for g in range(ngen):
                c_pair(V + g * dim, x, dim, &sa, &sb)
                if c_zt_sign(sa, sb) < 0:
                    if c_apply(x, U + g * dim, dim, sa, sb, y):
                        raise RangeExceeded("coordinate growth exceeds the compiled kernel range")
                    memcpy(x, y, dim * sizeof(int64_t))
                    word.append(g)
                    moved = 1
                    break
            if not moved:
                return tuple([x[k] for k in range(dim)]), word
        raise RuntimeError("dominant reduction did not terminate")
    finally:
        free(U)
        free(V)
        free(x)
        free(y)


def closure(gens, int n, mul, conj, neg, pos, int identity, int cap=30000):
    cdef int nn = n * n
    cdef int total = 2 * nn
    cdef int ngen = len(gens)
    cdef int* M = <int*>malloc(nn * sizeof(int))
    cdef int* C = <int*>malloc(n * sizeof(int))
    cdef int* N = <int*>malloc(n * sizeof(int))
    cdef char* P = <char*>malloc(n * sizeof(char))
    cdef int* G = <int*>malloc(max(1, ngen) * sizeof(int))
    cdef char* seen = <char*>calloc(total, sizeof(char))
    cdef int* queue = <int*>malloc(total * sizeof(int))
    cdef int i, head = 0, tail = 0, g, h, s, gs, gp, gq, hs, hp, hq, p, q, rest
    try:
        for i in range(nn):
            M[i] = mul[i]
        for i in range(n):
            C[i] = conj[i]
            N[i] = neg[i]
            P[i] = 1 if pos[i] else 0
        for i in range(ngen):
            G[i] = gens[i]
        seen[identity] = 1
        queue[tail] = identity
        tail += 1
        while head < tail:
            g = queue[head]
            head += 1
            gs = g // nn
            rest = g - gs * nn
            gp = rest // n
            gq = rest - gp * n
            for i in range(ngen):
                h = G[i]
                hs = h // nn
                rest = h - hs * nn
                hp = rest // n
                hq = rest - hp * n
                if gs == 0:
                    p = M[gp * n + hp]
                    q = M[hq * n + gq]
                    s = hs
                else:
                    p = M[gp * n + C[hq]]
                    q = M[C[hp] * n + gq]
                    s = 1 - hs
                if not P[p]:
                    p = N[p]
                    q = N[q]
                h = s * nn + p * n + q
                if not seen[h]:
                    seen[h] = 1
                    if tail >= cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
                    queue[tail] = h
                    tail += 1
        return [queue[i] for i in range(tail)]
    finally:
        free(M)
        free(C)
        free(N)
        free(P)
        free(G)
        free(seen)
        free(queue)
