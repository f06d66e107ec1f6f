"""Time the compiled kernel against the pure-Python one.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""
from __future__ import annotations

import argparse
import time

from h4poly import _kernel
from h4poly.coxeter import IDENTITY, build_system, encode, to_zt
from h4poly.orbits import WeightVector
from h4poly.qgroups import icosian_group

WEIGHTS = ["0,0,0,1", "1,0,0,1", "1,1,1,1"]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    h4 = build_system("H4")
    us, vs = h4.reflections
    for text in WEIGHTS:
        flat, _ = to_zt(WeightVector.parse("H4", text).omega)
        yield f"orbit_bfs {text}", lambda m, f=flat: m.orbit_bfs(f, us, vs, 0)
    pts = _kernel.backends()["python"].orbit_bfs(to_zt(WeightVector.parse("H4", "1,1,1,1").omega)[0], us, vs, 0)[0]
    sample = pts[::12]
    yield f"reduce_dominant x{len(sample)}", lambda m: [m.reduce_dominant(p, us, vs) for p in sample]

    grp = icosian_group()
    n, mul, conj, neg, pos = grp.tables()
    gens = [encode(g, grp) for g in h4.generators]
    ident = encode(IDENTITY, grp)
    yield "closure W(H4)", lambda m: m.closure(gens, n, mul, conj, neg, pos, ident)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    impls = _kernel.backends()
    names = list(impls)
    print(f"default backend: {_kernel.BACKEND}")
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        times = [best_of(lambda m=impls[n]: fn(m), args.repeat) for n in names]
        row = f"{label:28s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)
    if len(names) == 1:
        print("compiled kernel not built; run `python3 setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
