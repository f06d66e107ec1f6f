"""Published values used by the comparison harness and the acceptance tests.

Scalars are literals in the grammar of :func:`h4poly.golden.parse_scalar`.
Each dual-polytope entry is keyed by its H4 weight and records which cell
centre the published construction keeps unscaled, the published scale
factors (name -> (node, value)), the radii ratios and the dual-cell
coordinates, each point given as (factor name or None, prefactor, triple).
"""
from __future__ import annotations

GROUP_ORDERS = {"T": 24, "Tprime": 24, "O": 48, "I": 120, "S": 96, "Itilde": 120,
                "W(H4)": 14400, "W(H3)": 120, "W(A4)": 120, "W(A3)": 24, "Aut(A4)": 240}

CLASS_TABLE = [  # (size, element order)
    (1, 1), (1, 2), (12, 10), (12, 5), (12, 10), (12, 5), (20, 6), (20, 3), (30, 4),
]

CARTAN = {
    "H4": [["2", "-t", "0", "0"], ["-t", "2", "-1", "0"], ["0", "-1", "2", "-1"], ["0", "0", "-1", "2"]],
    "H3": [["2", "-t", "0"], ["-t", "2", "-1"], ["0", "-1", "2"]],
    "A4": [["2", "-1", "0", "0"], ["-1", "2", "-1", "0"], ["0", "-1", "2", "-1"], ["0", "0", "-1", "2"]],
}

# Printed inverse Cartan matrices, including their overall prefactors.
PRINTED_INVERSE = {
    "H4": ("t^4", [["4", "3*t", "2*t", "t"], ["3*t", "6", "4", "2"],
                   ["2*t", "4", "2*(2+s)", "2+s"], ["t", "2", "2+s", "2*s^2"]]),
    "H3": ("1/2", [["3*t^2", "2*t^3", "t^3"], ["2*t^3", "4*t^2", "2*t^2"], ["t^3", "2*t^2", "t+2"]]),
    "A4": ("1/5", [["4", "3", "2", "1"], ["3", "6", "4", "2"], ["2", "4", "6", "3"], ["1", "2", "3", "4"]]),
}

# Rows of the matrix expressing the H4 weights in the A4 weight basis.
OMEGA_IN_A4_BASIS = [
    ["t^4", "-2*t^2", "1", "t"],
    ["2*t^3", "-(3*t+1)", "0", "t^2"],
    ["3*t+1", "-t^3", "0", "1"],
    ["2*t", "-t", "0", "0"],
]

ORBIT_SIZES = {
    "0,0,0,1": 120, "1,0,0,0": 600, "0,1,0,0": 1200, "0,0,1,0": 720,
    "1,0,0,1": 2400, "0,1,0,1": 3600, "0,0,1,1": 1440, "0,1,1,0": 3600,
    "1,0,1,0": 3600, "1,1,0,0": 2400, "1,1,1,0": 7200, "1,1,0,1": 7200,
    "1,0,1,1": 7200, "0,1,1,1": 7200, "1,1,1,1": 14400,
}

# cell label -> (total count, cells at one vertex)
CELLS = {
    "0,0,0,1": {"tetrahedron": (600, 20)},
    "1,0,0,0": {"dodecahedron": (120, 4)},
    "0,1,0,0": {"tetrahedron": (600, 2), "icosidodecahedron": (120, 3)},
    "0,0,1,0": {"icosahedron": (120, 2), "octahedron": (600, 5)},
    "1,0,0,1": {"dodecahedron": (120, 1), "tetrahedron": (600, 1),
                "pentagonal prism": (720, 3), "triangular prism": (1200, 3)},
    "0,1,0,1": {"icosidodecahedron": (120, 1), "cuboctahedron": (600, 2), "pentagonal prism": (720, 2)},
    "0,0,1,1": {"icosahedron": (120, 1), "truncated tetrahedron": (600, 5)},
    "0,1,1,0": {"truncated icosahedron": (120, 2), "truncated tetrahedron": (600, 2)},
    "1,0,1,0": {"small rhombicosidodecahedron": (120, 2), "octahedron": (600, 1), "triangular prism": (1200, 2)},
    "1,1,0,0": {"truncated dodecahedron": (120, 3), "tetrahedron": (600, 1)},
    "1,1,1,0": {"great rhombicosidodecahedron": (120, 2), "truncated tetrahedron": (600, 1),
                "triangular prism": (1200, 1)},
    "1,1,0,1": {"truncated dodecahedron": (120, 1), "cuboctahedron": (600, 1),
                "decagonal prism": (720, 2), "triangular prism": (1200, 1)},
    "1,0,1,1": {"small rhombicosidodecahedron": (120, 1), "truncated tetrahedron": (600, 1),
                "pentagonal prism": (720, 1), "hexagonal prism": (1200, 2)},
    "0,1,1,1": {"truncated icosahedron": (120, 1), "truncated octahedron": (600, 2), "pentagonal prism": (720, 1)},
    "1,1,1,1": {"great rhombicosidodecahedron": (120, 1), "truncated octahedron": (600, 1),
                "decagonal prism": (720, 1), "hexagonal prism": (1200, 1)},
}

# Branch tables: lists of (weight literals, height literal or None). A "+-"
# prefix on a height stands for both signs.
BRANCH_H3 = {
    "0,0,0,1": [("0,0,0", "+-1"), ("0,0,1", "+-t/2"), ("0,0,t", "+-s/2"), ("1,0,0", "+-1/2"), ("0,1,0", "0")],
    "1,0,0,0": [("1,0,0", "+-t^3/2"), ("t,0,0", "+-(t+2)/2"), ("t^2,0,0", "+-s/2"), ("0,t,0", "+-t"),
                ("0,1,t", "+-t^2/2"), ("0,t,1", "+-t/2"), ("t,0,t", "+-1/2"), ("1,0,t^2", "0")],
    # the published third term reads "(1,10)"; it is entered here as (1,1,0)
    "0,1,0,0": [("t,0,0", "+-3*t/2"), ("0,1,0", "+-t^2"), ("0,t^2,0", "+-1"), ("1,1,0", "+-t^3/2"),
                ("0,t,1", "+-(t+2)/2"), ("0,t,t", "+-t^2/2"), ("1,0,t^2", "+-t"), ("t^2,0,1", "+-1/2"),
                ("t,0,t^2", "+-s/2"), ("1,1,t", "+-t/2"), ("2*t,0,0", "0"), ("0,1,2*t", "0")],
    "0,0,1,0": [("0,0,1", "+-(t+2)/2"), ("0,0,t^2", "+-(t-s)/2"), ("0,1,0", "+-t"), ("0,0,2*t", "0"),
                ("0,1,t", "+-s/2"), ("1,0,1", "+-t^2/2"), ("1,0,t", "+-t/2"), ("1,1,0", "+-1/2"),
                ("t,0,1", "0"), ("0,t,0", "+-1")],
}

BRANCH_A4 = {
    "0,0,0,1": ["0,0,1,t", "t,1,0,0", "t,0,0,t", "1,0,t,0", "0,t,0,1"],
    "1,0,0,0": ["3*t+1,0,0,0", "0,0,0,3*t+1", "1,t^3,0,0", "0,0,t^3,1", "t,0,0,2*t^2", "2*t^2,0,0,t",
                "0,t^2,t^2,0", "1,t,0,t^3", "t^3,0,t,1", "t,t^2,t,0", "0,t,t^2,t", "t^2,t,1,t", "t,1,t,t^2"],
    "0,1,0,0": ["0,3*t+1,0,0", "0,0,3*t+1,0", "t^4,0,0,1", "1,0,0,t^4", "2*t^2,0,t^2,0", "0,t^2,0,2*t^2",
                "t,t^3,1,0", "0,1,t^3,t", "1,2*t,t^2,0", "0,t^2,2*t,1", "t^2,0,t^2,2*t", "2*t,t^2,0,t^2",
                "t,1,0,3*t+1", "3*t+1,0,1,t", "1,t,t^2,t^2", "t^2,t^2,t,1", "t,t,1,t^3", "t^3,1,t,t",
                "t^2,t,t,t^2"],
    "0,0,1,0": ["t^3,0,1,0", "0,1,0,t^3", "0,2*t,1,0", "0,1,2*t,0", "t,t^2,0,1", "1,0,t^2,t", "t^2,0,t,t",
                "t,t,0,t^2", "t^2,1,t,0", "0,t,1,t^2", "2*t,1,0,t", "t,0,1,2*t", "1,t,t,1"],
}

BRANCH_A3 = {
    "0,0,0,1": [("1,0,0", "4*t+3"), ("0,0,1", "-(4*t+3)"), ("t,0,0", "-5*t"), ("0,0,t", "5*t"),
                ("t^2,0,0", "2+s"), ("0,0,t^2", "-(2+s)"), ("0,t,0", "+-(2*t+4)"), ("1,0,t", "-(3*t+1)"),
                ("t,0,1", "3*t+1"), ("0,t,1", "-r5"), ("1,t,0", "r5"), ("t,1,0", "-(t+2)"),
                ("0,1,t", "t+2"), ("t,0,t", "0")],
}

# Closed-form A3 split as printed: (sub-orbit weight, height coefficients of a1..a4).
PRINTED_A3_SPLIT = [
    ("a1,a2,a3", (-1, -2, -3, -4)),
    ("a1,a2,a3+a4", (-1, 2, 3, -1)),
    ("a1,a2+a3,a4", (-1, 2, -2, -1)),
    ("a1+a2,a3,a4", (-1, -3, -2, -1)),
    ("a2,a3,a4", (4, 3, 2, 1)),
]

DUALS = {
    "0,0,0,1": {"unscaled": 1, "factors": {}, "radii": None, "cell": None},
    "1,0,0,0": {"unscaled": 4, "factors": {}, "radii": None, "cell": None},
    "0,1,0,0": {
        "unscaled": 4,
        "factors": {"lambda": (1, "2/(3*t)")},
        "radii": ([1, 4], [1.0, 1.061]),
        "edges": ["r2", "0.867"],
        "cell": [(None, "1", ["0", "0", "1"]), (None, "1/2", ["s", "t", "-1"]), (None, "1/2", ["-s", "-t", "-1"]),
                 (None, "1/3", ["-1", "-s^2", "0"]), (None, "1/3", ["1", "s^2", "0"])],
        "faces": 6,
    },
    "0,0,1,0": {
        "unscaled": 1,
        "factors": {"lambda": (4, "2*t/(2+s)")},
        "caption_variant": {"lambda": (4, "2*t/(3+s)")},
        "edges": ["r2", "1.26"],
        "radii": ([1, 4], [1.0, 1.023]),
        "cell": [(None, "1", ["0", "1", "t"]), (None, "1", ["0", "-1", "-t"]),
                 (None, "r5/2", ["-1", "-s", "-s^2"]), (None, "r5/2", ["s^2", "1", "s"]),
                 (None, "r5/2", ["-2*s", "0", "0"]), (None, "r5/2", ["s^2", "-1", "-s"]),
                 (None, "r5/2", ["-1", "s", "s^2"])],
        "faces": 10,
    },
    "1,0,0,1": {
        "unscaled": 2,
        "factors": {"lambda": (3, "t^4/(t+3)"), "rho": (1, "t^4/(t+4)"), "eta": (4, "t^4/(s+3)")},
        "radii": ([2, 3, 4, 1], [2.45, 2.47, 2.52, 2.97]),
        "cell": [("rho", "1", ["s^2", "0", "1"]), (None, "1", ["-1", "-s^2", "-2*s"]),
                 (None, "1", ["-s", "s+2", "-s"]), (None, "1", ["-2*s", "-1", "s^2"]),
                 ("lambda", "1", ["-1", "1", "-s^3"]), ("lambda", "1", ["-s^2", "-(s+2)", "0"]),
                 ("lambda", "1", ["-2*s", "s^2", "s"]), ("eta", "1", ["-s^2", "0", "-1"])],
    },
    "0,1,0,1": {
        "unscaled": 3,
        "factors": {"lambda": (4, "(4*t+13)/10"), "rho": (1, "(7*t-8)/4")},
        "radii": ([3, 1, 4], [1.6625, 1.6631, 1.7019]),
        "cell": [("rho", "1", ["-r5", "s", "-t"]), ("rho", "1", ["r5", "-s", "-t"]),
                 (None, "1", ["-s", "-r5", "0"]), (None, "1", ["s", "r5", "0"]),
                 ("lambda", "1", ["0", "0", "2"])],
    },
    "0,0,1,1": {
        "unscaled": 1,
        "factors": {"lambda": (4, "(21*t+9)/19")},
        "radii": ([4, 1], [1.0, 1.012]),
        "edges": ["r2", "2.01"],
        "cell": [(None, "1", ["r5", "-1", "r5"]), (None, "1", ["2*s", "-t", "t^2"]), (None, "1", ["-3", "1", "1"]),
                 (None, "1", ["s", "2*t", "-s^2"]), (None, "1", ["t^2", "2", "s^2"]),
                 ("lambda", "1", ["0", "s", "-1"])],
    },
    "0,1,1,0": {
        "unscaled": 1,
        "factors": {"lambda": (4, "5*t/(4+s)")},
        "radii": ([4, 1], [1.0, 0.957]),
        "cell": [(None, "1", ["-2*t^2", "-s", "-1"]), (None, "1", ["t+2", "t+2", "-t"]),
                 ("lambda", "1", ["0", "1", "3*t"]), ("lambda", "1", ["1", "-(t+2)", "-2*t"])],
    },
    "1,0,1,0": {
        "unscaled": 4,
        "factors": {"lambda": (1, "3/(4+2*t)"), "rho": (2, "3/(4+3*t)")},
        "radii": ([1, 2, 4], [0.9991, 0.9495, 1.0]),
        "cell": [("lambda", "1", ["-t^2", "t", "-1"]), ("rho", "1", ["t", "t+2", "-t"]),
                 ("rho", "1", ["-2*t", "-t^2", "1"]), (None, "1", ["1", "1", "t^3"]),
                 (None, "1", ["t", "-t^2", "-2*t"])],
    },
    "1,1,0,0": {
        "unscaled": 4,
        "factors": {"lambda": (1, "(t+2)/(3*t+4)")},
        "edges": ["r2", "1.73"],
        "radii": ([4, 1], [1.0, 0.935]),
        "cell": [("lambda", "1", ["-t^2", "-1", "0"]), (None, "1", ["1", "0", "3*t+1"]),
                 (None, "1", ["-1", "2*t^2", "-t^2"]), (None, "1", ["t^2", "-t^3", "-2*t"])],
    },
    "1,1,1,0": {
        "unscaled": 4,
        "factors": {"lambda": (1, "5/(5*t+4)"), "rho": (2, "5/(3*t+10)")},
        "radii": ([1, 2, 4], [1.0032, 0.9433, 1.0]),
        "cell": [("lambda", "1", ["2*t^2", "s", "t"]), ("rho", "1", ["t", "t+2", "-t"]),
                 (None, "1", ["1", "1", "4*t+1"]), (None, "1", ["t^2", "-2*t^2", "-3*t"])],
    },
    "1,1,0,1": {
        "unscaled": 3,
        "factors": {"lambda": (1, "(6*s+7)/4"), "rho": (2, "(13*s+61)/79"), "eta": (4, "(13*t+36)/29")},
        "radii": ([4, 1, 2, 3], [1.00, 1.33, 1.88, 1.90]),
        "cell": [("lambda", "1/2", ["2-3*s", "-2*s", "-s^2"]), ("rho", "1", ["-t", "s", "2"]),
                 ("eta", "1", ["s", "0", "-t-2"]), (None, "1", ["-r5", "2*t", "s"]),
                 (None, "1", ["0", "3*s-2", "-1"])],
    },
    "1,0,1,1": {
        "unscaled": 2,
        "factors": {"lambda": (4, "(33*t+36)/31"), "rho": (1, "(6*s+27)/19"), "eta": (3, "(33*t+51)/71")},
        "radii": ([1, 2, 3, 4], [1.418, 1.002, 1.000, 1.031]),
        "cell": [("rho", "1", ["r5", "-1", "r5"]), ("eta", "1", ["-t", "t", "s^2"]),
                 ("lambda", "1", ["s", "s", "-t^2"]), (None, "1", ["-1", "-r5", "3"]),
                 (None, "1", ["3", "r5", "1"])],
    },
    "0,1,1,1": {
        "unscaled": 1,
        "factors": {"lambda": (4, "(6*t+2)/5"), "rho": (3, "6*(13*t+3)/121")},
        "radii": ([1, 3, 4], [1.000, 0.9906, 1.0233]),
        "cell": [(None, "1", ["-(2*t+3)", "-s", "-(t+2)"]), (None, "1", ["t+3", "t+2", "-(2*t+1)"]),
                 ("rho", "1", ["1", "-(t+2)", "0"]), ("lambda", "1", ["0", "1", "3*t"])],
    },
    "1,1,1,1": {
        "unscaled": 4,
        "factors": {"lambda": (1, "(31*s+20)/2"), "rho": (2, "(17*s+30)/57"), "eta": (3, "(17*s+89)/155")},
        "radii": ([1, 2, 3, 4], [0.9621, 0.9584, 0.9632, 1.000]),
        "all_distances_distinct": True,
        "cell": [("lambda", "1", ["-(5*t+2)", "1", "-(3*t+1)"]), ("rho", "1", ["t+1", "3*t+1", "-3*(t+1)"]),
                 ("eta", "1", ["3*t+1", "-2*(2*t+1)", "t"]), (None, "1", ["t", "t", "4+5*t"])],
    },
}

UNIFORM_WEIGHTS = list(ORBIT_SIZES)
