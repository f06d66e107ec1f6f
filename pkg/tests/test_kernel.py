from __future__ import annotations

import os
import subprocess
import sys

import pytest

from h4poly import _kernel
from h4poly._kernel import _pykernel
from h4poly.coxeter import build_system, to_zt
from h4poly.orbits import WeightVector

WEIGHTS = ["0,0,0,1", "1,0,0,0", "0,1,0,0", "0,0,1,0", "1,1,1,1", "t,0,1,2"]


def _seed(text):
    return to_zt(WeightVector.parse("H4", text).omega)


@pytest.mark.parametrize("text", WEIGHTS)
def test_backends_agree_on_orbits(text):
    flat, _ = _seed(text)
    us, vs = build_system("H4").reflections
    results = {name: sorted(mod.orbit_bfs(flat, us, vs, 0)[0]) for name, mod in _kernel.backends().items()}
    first = next(iter(results.values()))
    assert all(r == first for r in results.values())


@pytest.mark.parametrize("text", WEIGHTS)
def test_backends_agree_on_reduction(text):
    flat, _ = _seed(text)
    us, vs = build_system("H4").reflections
    pts = _pykernel.orbit_bfs(flat, us, vs, 0)[0]
    for name, mod in _kernel.backends().items():
        for p in pts[:: max(1, len(pts) // 50)]:
            red, word = mod.reduce_dominant(p, us, vs)
            assert tuple(red) == tuple(flat)
            x = tuple(p)
            for g in word:
                x = _pykernel.reflect_vec(x, us[g], vs[g])
            assert tuple(x) == tuple(flat)


def test_orbit_parents_rebuild_points():
    flat, _ = _seed("1,0,0,1")
    us, vs = build_system("H4").reflections
    for mod in _kernel.backends().values():
        pts, parents, gens = mod.orbit_bfs(flat, us, vs, 0)
        assert parents[0] == -1
        for k in range(1, len(pts)):
            assert tuple(_pykernel.reflect_vec(pts[parents[k]], us[gens[k]], vs[gens[k]])) == tuple(pts[k])


def test_cap():
    flat, _ = _seed("1,1,1,1")
    us, vs = build_system("H4").reflections
    for mod in _kernel.backends().values():
        with pytest.raises(_kernel.CapExceeded):
            mod.orbit_bfs(flat, us, vs, 100)


def test_large_coordinates_fall_back():
    us, vs = build_system("H4").reflections
    big = (10 ** 30, 0, 0, 0, 0, 0, 1, 0)
    small = (1, 0, 0, 0, 0, 0, 1, 0)
    pts = _kernel.orbit_bfs(big, us, vs, 0)[0]
    assert len(pts) == len(_kernel.orbit_bfs(small, us, vs, 0)[0]) == 2400


def test_pure_python_switch():
    env = dict(os.environ, H4POLY_PURE_PYTHON="1")
    code = "from h4poly import _kernel; print(_kernel.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_present():
    # the extension is optional; when it is built it must be the default
    names = set(_kernel.backends())
    if len(names) > 1:
        assert _kernel.BACKEND != "python"
