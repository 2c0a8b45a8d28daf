"""Command-line interface.

Verbs:
  eval    evaluate a single harmonic at a 4D point
  cgc     O(4) Clebsch-Gordan coefficient (with closed-form cross-check)
  ninej   4D 9j recoupling coefficient
  expand  multipole coefficient table B^{(n j)}_{l lp}
  verify  run a quadrature verification suite

Half-integer projections of the H family are passed as doubled integers;
pass --doubled to interpret *all* quantum-number inputs as doubled (so
``--j 3 --doubled`` means j = 3/2 worth of rank, i.e. the stored integer
label 3).  Exit status: 0 on success/all checks passed, 1 on failed
verification, 2 on usage errors.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import verify as verify_mod
from .coupling import cgc4_c, cgc4_c_closed, cgc4_h, ninej4, bipolar_values
from .harmonics import c_components, hsh_c, hsh_h
from .multipole import CoeffTable, ExpansionSpec, expand_translated
from .special import DEFAULT_SERIES

_CLOSED_CASES = ("stretched", "stretched_j1_zero_lambda", "diff",
                 "six_j_reduction", "spin1")


def _fmt(x):
    if isinstance(x, complex):
        return "%.17g%+.17gj" % (x.real, x.imag)
    return "%.17g" % x


def default_tol():
    """Default verification tolerance; HSH4_TOL overrides."""
    return float(os.environ.get("HSH4_TOL", "1e-10"))


def _parse_point(text):
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("--point needs four components x,y,z,z0")
    return np.array(parts)


def _halve(label, value):
    if value % 2:
        raise ValueError(f"--doubled value for {label} must be even here")
    return value // 2


def _cmd_eval(args):
    point = _parse_point(args.point)
    if args.family == "c":
        j, lam, alf = args.j, args.lam, args.alpha
        if args.doubled:
            j, lam, alf = _halve("j", j), _halve("lambda", lam), _halve(
                "alpha", alf)
        val = hsh_c(j, lam, alf, point)
        label = f"C[j={j},lam={lam},alpha={alf}]"
    else:
        if args.mu is None or args.nu is None:
            raise ValueError("family h needs --mu and --nu (doubled integers)")
        j, tmu, tnu = args.j, args.mu, args.nu
        if not args.doubled:
            tmu, tnu = 2 * tmu, 2 * tnu
        val = hsh_h(j, tmu, tnu, point)
        label = f"H[j={j},2mu={tmu},2nu={tnu}]"
    if args.output == "json":
        print(json.dumps({"harmonic": label, "point": list(point),
                          "re": val.real, "im": val.imag}))
    else:
        print(f"{label} = {_fmt(val)}")
    return 0


def _cmd_cgc(args):
    q = [int(t) for t in args.q.split(",")]
    if len(q) != 9:
        raise ValueError("--q needs nine comma-separated integers")
    if args.family == "c":
        if args.doubled:
            q = [_halve("q", t) for t in q]
        val = cgc4_c(*q)
        closed = None
        for case in _CLOSED_CASES:
            try:
                closed = (case, cgc4_c_closed(case, *q))
                break
            except ValueError:
                continue
    else:
        if not args.doubled:
            q = [2 * t for t in q]
        # family h carries doubled labels throughout: j1,2mu1,2nu1,...
        val = cgc4_h(*q)
        closed = None
    payload = {"family": args.family, "q": q, "value": val}
    if closed is not None:
        payload["closed_form"] = {"case": closed[0], "value": closed[1],
                                  "difference": val - closed[1]}
    if args.output == "json":
        print(json.dumps(payload))
    else:
        print(f"cgc = {_fmt(val)}")
        if closed is not None:
            print(f"closed[{closed[0]}] = {_fmt(closed[1])}  "
                  f"diff = {_fmt(val - closed[1])}")
    return 0


def _cmd_ninej(args):
    q = [int(t) for t in args.q.split(",")]
    if len(q) != 9:
        raise ValueError("--q needs nine comma-separated integer ranks")
    val = ninej4(*q)
    if args.output == "json":
        print(json.dumps({"q": q, "value": val}))
    else:
        print(f"ninej4 = {_fmt(val)}")
    return 0


def _cmd_expand(args):
    spec = ExpansionSpec(args.n, args.j, args.r1, args.r2, l_max=args.lmax)
    table = expand_translated(spec)
    if args.output == "json":
        print(table.to_json())
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _verify_expansion_checks(tol, seed):
    checks = []
    rng = np.random.default_rng(seed)
    for (n, j) in ((1, 1), (2, 0), (3, 1), (-2, 0)):
        spec = ExpansionSpec(n, j, 0.5, 1.0,
                             l_max=30 if n > 0 else 32)
        table = expand_translated(spec)
        worst = 0.0
        for _ in range(5):
            h1 = rng.normal(size=4)
            h1 /= np.linalg.norm(h1)
            h2 = rng.normal(size=4)
            h2 /= np.linalg.norm(h2)
            r = 0.5 * h1 + 1.0 * h2
            lhs = np.linalg.norm(r) ** n * c_components(j, r)
            rhs = sum(v * bipolar_values("c", l, lp, j,
                                         c_components(l, h1),
                                         c_components(lp, h2))
                      for (l, lp), v in table.entries.items())
            worst = max(worst, float(np.max(np.abs(lhs - rhs))
                                     / np.max(np.abs(lhs))))
        checks.append(verify_mod.check_entry(
            "expansion-residual", {"n": n, "j": j, "r1": 0.5, "r2": 1.0},
            0.0, worst, max(tol, 1e-8)))
    return checks


def _verify_coupling_checks(tol, seed):
    checks = []
    rng = np.random.default_rng(seed)
    # CGC contraction orthogonality on random columns.
    worst = 0.0
    for _ in range(20):
        j1, j2 = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        js = list(range(abs(j1 - j2), j1 + j2 + 1, 2))
        j = int(rng.choice(js))
        jq = int(rng.choice(js))
        for lam, alf in ((j, 0), (0, 0)) if j == jq else ((j, 0),):
            lamq = min(jq, lam)
            acc = 0.0
            for lam1 in range(j1 + 1):
                for alf1 in range(-lam1, lam1 + 1):
                    for lam2 in range(j2 + 1):
                        alf2 = alf - alf1
                        if abs(alf2) > lam2:
                            continue
                        acc += (cgc4_c(j1, lam1, alf1, j2, lam2, alf2,
                                       j, lam, alf)
                                * cgc4_c(j1, lam1, alf1, j2, lam2, alf2,
                                         jq, lamq, alf))
            expect = 1.0 if (j == jq and lam == lamq) else 0.0
            worst = max(worst, abs(acc - expect))
    checks.append(verify_mod.check_entry(
        "cgc-orthogonality", {"j_max": 3}, 0.0, worst, max(tol, 1e-12)))
    # Closed-form spot checks.
    worst = 0.0
    count = 0
    for j1 in range(0, 4):
        for j2 in range(0, 4):
            j = j1 + j2
            for lam in range(j + 1):
                for lam1 in range(j1 + 1):
                    for lam2 in range(j2 + 1):
                        if lam1 + lam2 > lam:
                            continue
                        val = cgc4_c(j1, lam1, lam1, j2, lam2, lam2,
                                     j, lam, lam1 + lam2)
                        ref = cgc4_c_closed("stretched", j1, lam1, lam1,
                                            j2, lam2, lam2, j, lam,
                                            lam1 + lam2)
                        worst = max(worst, abs(val - ref))
                        count += 1
    checks.append(verify_mod.check_entry(
        "cgc-closed-form-stretched", {"queries": count}, 0.0, worst,
        max(tol, 1e-12)))
    return checks


def _cmd_verify(args):
    tol = args.tol if args.tol is not None else default_tol()
    if args.suite == "orthogonality":
        n0, n1, n2 = (int(t) for t in args.grid.split(","))
        grid = verify_mod.build_grid(n0, n1, n2)
        checks, _ = verify_mod.orthogonality_report(args.jmax, grid, tol=tol)
    elif args.suite == "expansion":
        checks = _verify_expansion_checks(tol, args.seed)
    else:
        checks = _verify_coupling_checks(tol, args.seed)
    print(json.dumps(checks, indent=2))
    return 0 if all(c["pass"] for c in checks) else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="hsh4",
        description="4D hyperspherical harmonics, O(4) coupling and "
                    "multipole expansions.",
        epilog="With --doubled, quantum-number inputs are doubled integers "
               "(2j, 2mu, ...), which keeps half-integer projections exact.")
    sub = p.add_subparsers(dest="verb", required=True)

    pe = sub.add_parser("eval", help="evaluate one harmonic at a point")
    pe.add_argument("--family", choices=("c", "h"), required=True)
    pe.add_argument("--j", type=int, required=True)
    pe.add_argument("--lambda", dest="lam", type=int, default=None)
    pe.add_argument("--alpha", type=int, default=None)
    pe.add_argument("--mu", type=int, default=None)
    pe.add_argument("--nu", type=int, default=None)
    pe.add_argument("--point", required=True, help="x,y,z,z0")
    pe.add_argument("--doubled", action="store_true")
    pe.add_argument("--output", choices=("text", "json"), default="text")
    pe.set_defaults(func=_cmd_eval)

    pc = sub.add_parser("cgc", help="O(4) Clebsch-Gordan coefficient")
    pc.add_argument("--family", choices=("c", "h"), required=True)
    pc.add_argument("--q", required=True,
                    help="c: j1,lam1,alf1,j2,lam2,alf2,j,lam,alf; "
                         "h: j1,2mu1,2nu1,j2,2mu2,2nu2,j,2mu,2nu")
    pc.add_argument("--doubled", action="store_true")
    pc.add_argument("--output", choices=("text", "json"), default="text")
    pc.set_defaults(func=_cmd_cgc)

    pn = sub.add_parser("ninej", help="4D 9j coefficient")
    pn.add_argument("--q", required=True, help="a,b,c,d,e,f,g,h,k")
    pn.add_argument("--output", choices=("text", "json"), default="text")
    pn.set_defaults(func=_cmd_ninej)

    px = sub.add_parser("expand", help="multipole coefficient table")
    px.add_argument("--n", type=float, required=True)
    px.add_argument("--j", type=int, required=True)
    px.add_argument("--r1", type=float, required=True)
    px.add_argument("--r2", type=float, required=True)
    px.add_argument("--lmax", type=int, default=30)
    px.add_argument("--output", choices=("csv", "json"), default="csv")
    px.set_defaults(func=_cmd_expand)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite",
                    choices=("orthogonality", "expansion", "coupling"))
    pv.add_argument("--jmax", type=int, default=4)
    pv.add_argument("--grid", default="24,24,49", help="n0,n1,n2")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--tol", type=float, default=None,
                    help="override tolerance (default HSH4_TOL or 1e-10)")
    pv.set_defaults(func=_cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
