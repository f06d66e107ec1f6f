"""Command-line interface: ``h4poly <subcommand> ...``."""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from .golden import GoldenScalar

SUBGROUP_CHOICES = ("h3", "a4", "a3")


def _dump(data, path=None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True)
    if path:
        from .geometry import export_table

        export_table(data, path)
    else:
        print(text)


def _weight(system: str, text: str):
    from .orbits import WeightVector

    w = WeightVector.parse(system, text)
    if w.is_zero:
        raise ValueError("trivial weight: all coefficients are zero")
    if not w.is_dominant:
        raise ValueError(f"weight {w.label()} is not dominant (all coefficients must be >= 0)")
    return w


def _lit(x: GoldenScalar) -> str:
    return x.to_literal()


# -- subcommands ---------------------------------------------------------------
def cmd_classes(args) -> int:
    from .qgroups import build_set, conjugacy_classes

    qset = build_set(args.set)
    out = []
    for c in conjugacy_classes(qset):
        out.append({
            "label": c["label"],
            "size": c["size"],
            "order": c["order"],
            "representative": c["representative"].to_json(),
            "members": [q.to_json() for q in c["members"]] if args.members else None,
        })
    _dump({"group": qset.name, "order": len(qset), "classes": out}, args.json)
    return 0


def cmd_table(args) -> int:
    from .coxeter import build_system

    sysobj = build_system(args.group)
    data = {
        "group": sysobj.name,
        "roots": [q.to_json() for q in sysobj.roots],
        "cartan": [[_lit(x) for x in row] for row in sysobj.cartan],
        "cartan_inverse": [[_lit(x) for x in row] for row in sysobj.cartan_inverse],
        "weights": [q.to_json() for q in sysobj.weights],
    }
    _dump(data, args.json)
    return 0


def cmd_orbit(args) -> int:
    from .orbits import orbit

    w = _weight(args.group.upper(), args.weight)
    poly = orbit(w.system, w)
    data = {
        "group": w.system,
        "weight": [_lit(a) for a in w.coeffs],
        "vertices": poly.size,
        "group_order": poly.group.order,
        "stabilizer_order": poly.stabilizer_order,
    }
    if args.list:
        data["points"] = [[_lit(a) for a in x] for x in poly.omega_vertices]
    _dump(data, args.json)
    return 0


def cmd_cells(args) -> int:
    from .orbits import cell_census

    census = cell_census(_weight("H4", args.weight))
    _dump(census.to_json(), args.json)
    return 0


def cmd_branch(args) -> int:
    from .branching import branch

    table = branch(_weight("H4", args.weight), args.subgroup, args.jobs)
    _dump(table.to_json(), args.json)
    return 0


def cmd_dual(args) -> int:
    from .dual import dual_cell_geometry, dual_polytope
    from .geometry import export_mesh, hull3

    dual = dual_polytope(_weight("H4", args.weight), anchor=args.anchor)
    data = dual.to_json()
    radii = dual.radii()
    base = radii[dual.anchor]
    data["radii_ratios"] = {f"R{j}/R{dual.anchor}": round(r / base, 6) for j, r in radii.items()}
    if args.mesh:
        pts = [p for _, p in dual_cell_geometry(dual)]
        export_mesh(hull3(pts), args.mesh, args.mesh.rsplit(".", 1)[-1] if "." in args.mesh else "off")
    _dump(data, args.json)
    return 0


def cmd_export(args) -> int:
    from .dual import dual_cell_geometry, dual_polytope
    from .geometry import export_mesh, hull3, project_shells

    w = _weight("H4", args.weight)
    if args.dual_cell:
        pts = [p for _, p in dual_cell_geometry(dual_polytope(w))]
        info = {"source": "dual cell"}
    else:
        shells = project_shells(w, args.subgroup)
        if not 0 <= args.shell < len(shells):
            raise ValueError(f"shell index {args.shell} out of range 0..{len(shells) - 1}")
        shell = shells[args.shell]
        pts = shell.points
        info = {"source": "shell", "label": shell.label, "height": _lit(shell.height),
                "weight": [_lit(a) for a in shell.weight]}
    hull = hull3(pts, limit=max(128, len(pts)))
    export_mesh(hull, args.output, args.format)
    info.update({"output": args.output, "vertices": len(hull.vertex_indices), "faces": len(hull.facets)})
    _dump(info)
    return 0


def cmd_shells(args) -> int:
    from .geometry import project_shells

    shells = project_shells(_weight("H4", args.weight), args.subgroup)
    _dump([{"index": k, "label": s.label, "size": s.size, "height": _lit(s.height),
            "weight": [_lit(a) for a in s.weight]} for k, s in enumerate(shells)], args.json)
    return 0


def cmd_verify(args) -> int:
    from .verify import CRITERIA, CriterionResult, report_json

    results = []
    for n, title, fn in CRITERIA:
        if args.only and n not in args.only:
            continue
        r = CriterionResult(n, title, fn(args.jobs))
        results.append(r)
        print(r.line(), flush=True)
        if args.verbose:
            for c in r.checks:
                print(c.line())
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report_json(results) + "\n")
    return 0 if all(r.passed for r in results) else 1


# -- parser --------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="h4poly", description="W(H4) orbits, branchings and duals from quaternions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="conjugacy classes of a finite quaternion group")
    p.add_argument("--set", default="I", choices=["T", "Tprime", "O", "I", "Itilde"])
    p.add_argument("--members", action="store_true", help="list every class member")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("table", help="Cartan data of a Coxeter system")
    p.add_argument("kind", choices=["cartan"])
    p.add_argument("--group", default="H4", type=str.upper, choices=["H4", "H3", "A4", "A3"])
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("orbit", help="orbit of a dominant weight")
    p.add_argument("--group", default="h4", type=str.lower, choices=["h4", "h3", "a4", "a3"])
    p.add_argument("--weight", required=True, help="comma-separated scalar literals, e.g. 0,0,t,1")
    p.add_argument("--list", action="store_true", help="include the vertices (weight coordinates)")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("cells", help="cell census of an H4 orbit polytope")
    p.add_argument("--weight", required=True)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("branch", help="branch an H4 orbit under a subgroup")
    p.add_argument("--weight", required=True)
    p.add_argument("--subgroup", default="h3", type=str.lower, choices=SUBGROUP_CHOICES)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("dual", help="dual polytope of a uniform H4 polytope")
    p.add_argument("--weight", required=True)
    p.add_argument("--anchor", type=int, choices=[1, 2, 3, 4], help="cell type left unscaled")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--mesh", metavar="PATH", help="write the dual cell as .off or .obj")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("shells", help="list the subgroup shells of an H4 orbit")
    p.add_argument("--weight", required=True)
    p.add_argument("--subgroup", default="h3", type=str.lower, choices=["h3", "a3"])
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_shells)

    p = sub.add_parser("export", help="write a shell or the dual cell as a mesh")
    p.add_argument("--weight", required=True)
    p.add_argument("--subgroup", default="h3", type=str.lower, choices=["h3", "a3"])
    p.add_argument("--shell", type=int, default=0)
    p.add_argument("--dual-cell", action="store_true")
    p.add_argument("--format", default="off", type=str.lower, choices=["off", "obj"])
    p.add_argument("output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify-paper", help="replay every published claim and report pass/fail")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        weight = getattr(args, "weight", None)
        where = f" (weight {weight})" if weight else ""
        print(f"h4poly: error{where}: {exc}", file=sys.stderr)
        return 2


def main_to_string(argv) -> str:
    """Run a subcommand and capture its standard output."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = main(argv)
    if status:
        raise RuntimeError(f"h4poly {' '.join(argv)} exited with {status}")
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
