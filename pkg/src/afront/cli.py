"""Command-line interface.

Verbs: catalog list|build, check, classify, curvature, mesh, solve-genus1,
continue-genus1.  Exit code 0 iff every requested check passed.  Setting
AFRONT_STRICT=0 disables the strict period gate for psi evaluation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io as afio
from .catalog import catalog_build, catalog_list
from .ends import classify_end, osserman_report
from .errors import AfrontError
from .grids import GridSpec, default_grid
from .meshing import export_csv, export_obj, sample_mesh
from .surface import total_curvature, validate


def _parse_value(text):
    """Parse an int, a complex scalar ('1+0.5i'), or a comma tuple of them."""
    if "," in text:
        return tuple(_parse_value(t) for t in text.split(","))
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse value {text!r}") from exc


def _parse_params(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = _parse_value(v.strip())
    return out


def _cmd_catalog(args):
    if args.action == "list":
        entries = catalog_list()
        if args.json:
            print(json.dumps([e.to_json() for e in entries], indent=2))
        else:
            for e in entries:
                print(f"{e.id:16s} ({e.constraint_text or 'no constraints'})")
                print(f"    {e.description}")
        return 0
    params = _parse_params(args.param)
    data = catalog_build(args.id, params)
    deg, tc = total_curvature(data)
    print(f"built {args.id}: genus {data.domain.genus}, "
          f"{len(data.domain.ends())} end(s), deg rho = {deg}, "
          f"total curvature = {tc / np.pi:+.1f} pi")
    if args.output:
        afio.dump_data(data, args.output)
        print(f"wrote {args.output}")
    return 0


def _cmd_check(args):
    data = afio.load_data(args.spec)
    validate(data)
    report = data.period_report(tol=args.tol)
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.passed else 1


def _cmd_classify(args):
    data = afio.load_data(args.spec)
    validate(data)
    ends = [classify_end(data, p) for p in data.domain.ends()]
    ledger = osserman_report(data)
    out = {"ends": [e.to_json() for e in ends], "osserman": ledger.to_json()}
    print(json.dumps(out, indent=2))
    return 0


def _cmd_curvature(args):
    data = afio.load_data(args.spec)
    validate(data)
    deg, tc = total_curvature(data)
    print(json.dumps({"deg_rho": deg, "total_curvature": tc,
                      "multiple_of_minus_2pi": deg}))
    return 0


def _grid_from_args(data, args):
    base = default_grid(data.domain)
    n, m = (int(v) for v in args.grid.split("x"))
    kw = {"kind": base.kind, "n": n, "m": m}
    if base.kind == "annulus":
        kw["rmin"] = args.rmin
        kw["rmax"] = args.rmax
    if args.rect is not None:
        x0, x1, y0, y1 = (float(v) for v in args.rect.split(","))
        kw.update(kind="rect", x0=x0, x1=x1, y0=y0, y1=y1)
    return GridSpec(**kw)


def _cmd_mesh(args):
    data = afio.load_data(args.spec)
    validate(data)
    grid = _grid_from_args(data, args)
    mesh = sample_mesh(data, grid, exclusion_radius=args.exclude)
    if args.output.endswith(".csv"):
        blob = export_csv(mesh, z_scale=args.z_scale)
    else:
        blob = export_obj(mesh)
    with open(args.output, "wb") as fh:
        fh.write(blob)
    print(f"wrote {args.output}: {mesh.n_vertices} vertices, "
          f"{mesh.n_faces} faces, {int(mesh.singular_flags.sum())} singular-flagged")
    return 0


def _cmd_solve_genus1(args):
    from .genus1 import P_of_alpha, build_genus1_8pi, choose_c, solve_alpha0

    alpha0 = solve_alpha0(tol=args.tol)
    c = choose_c(alpha0)
    data = build_genus1_8pi(alpha0=alpha0)
    report = data.period_report()
    out = {
        "alpha0": alpha0,
        "c": [c.real, c.imag],
        "P_residual": abs(P_of_alpha(alpha0)),
        "period_report": report.to_json(),
    }
    print(json.dumps(out, indent=2))
    return 0 if report.passed else 1


def _cmd_continue_genus1(args):
    from .genus1 import continue_genus1

    fam = continue_genus1(steps=args.steps, step=args.step)
    out = [
        {
            "tau": [f["tau"].real, f["tau"].imag],
            "c": [f["c"].real, f["c"].imag],
            "P_residual": f["P_residual"],
        }
        for f in fam
    ]
    print(json.dumps(out, indent=2))
    worst = max(f["P_residual"] for f in fam) if fam else 0.0
    return 0 if worst < 1e-3 else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="afront",
        description="improper affine fronts from Weierstrass data",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list or build classified families")
    catsub = cat.add_subparsers(dest="action", required=True)
    cl = catsub.add_parser("list")
    cl.add_argument("--json", action="store_true")
    cb = catsub.add_parser("build")
    cb.add_argument("id")
    cb.add_argument("--param", action="append", metavar="name=value")
    cb.add_argument("-o", "--output", help="write the surface spec JSON here")

    ck = sub.add_parser("check", help="validation + period condition")
    ck.add_argument("spec")
    ck.add_argument("--tol", type=float, default=1e-8)

    cf = sub.add_parser("classify", help="end types and the Osserman ledger")
    cf.add_argument("spec")

    cv = sub.add_parser("curvature", help="deg rho and total curvature")
    cv.add_argument("spec")

    ms = sub.add_parser("mesh", help="sample psi and export OBJ/CSV")
    ms.add_argument("spec")
    ms.add_argument("-o", "--output", required=True)
    ms.add_argument("--grid", default="64x64")
    ms.add_argument("--rmin", type=float, default=0.2)
    ms.add_argument("--rmax", type=float, default=2.0)
    ms.add_argument("--rect", help="x0,x1,y0,y1 rectangle instead of the annulus")
    ms.add_argument("--exclude", type=float, default=0.05)
    ms.add_argument("--z-scale", type=float, default=None)

    sg = sub.add_parser("solve-genus1", help="root alpha0, coefficient c, periods")
    sg.add_argument("--tol", type=float, default=1e-12)

    cg = sub.add_parser("continue-genus1", help="one-parameter family off the circle")
    cg.add_argument("--steps", type=int, default=10)
    cg.add_argument("--step", type=float, default=0.02)

    return ap


_DISPATCH = {
    "catalog": _cmd_catalog,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "curvature": _cmd_curvature,
    "mesh": _cmd_mesh,
    "solve-genus1": _cmd_solve_genus1,
    "continue-genus1": _cmd_continue_genus1,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except AfrontError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
