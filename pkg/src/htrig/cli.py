"""Command-line front end: ``htrig sample``, ``htrig check``, ``htrig converge``.

Exit codes: 0 success, 1 a check suite failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import bsplines as bs
from .checks import SUITES, run_suite
from .classical import convergence_table
from .errors import HTrigError

FLAVORS = ("T", "E", "T~", "E~")
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def parse_knots(spec: str) -> list:
    """Inline ``"0,0.5,1"`` or ``@path`` (one real per line, ``#`` comments)."""
    if spec.startswith("@"):
        try:
            with open(spec[1:], encoding="utf-8") as fh:
                lines = [ln.split("#", 1)[0].strip() for ln in fh]
        except OSError as exc:
            raise UsageError(f"cannot read knot file: {exc}") from exc
        items = [ln for ln in lines if ln]
    else:
        items = [s.strip() for s in spec.split(",") if s.strip()]
    try:
        knots = [float(s) for s in items]
    except ValueError as exc:
        raise UsageError(f"bad knot value: {exc}") from exc
    if not knots:
        raise UsageError("no knots given")
    return knots


def sample_points(start: float, stop: float, step: float) -> list:
    """``start + k*step`` for every ``k >= 0`` landing in ``[start, stop)``."""
    if not step > 0:
        raise UsageError("--step must be positive")
    if not start < stop:
        raise UsageError("--from must be smaller than --to")
    xs, k = [], 0
    while (x := start + k * step) < stop:
        xs.append(x)
        k += 1
    return xs


def _fmt(v: float) -> str:
    return repr(float(v))


def cmd_sample(args) -> int:
    knots = parse_knots(args.knots)
    xs = sample_points(args.x_from, args.x_to, args.step)
    kv = bs.KnotVector(args.h, knots)
    m = args.order
    if kv.num_basis(m) == 0:
        raise UsageError(f"order {m} needs more than {len(knots)} knots")
    flavor, method = args.flavor, args.method
    base = flavor.rstrip("~")
    js = range(kv.num_basis(m))
    for j in js:
        kv.check(j, m)

    def value(j, x):
        if flavor.endswith("~"):
            return bs.eval_tilde(kv, j, m, x, base, method)
        if base == "T":
            return bs.eval_T(kv, j, m, x, method)
        return bs.eval_E(kv, j, m, x, method)

    name = {"T": "T", "E": "E", "T~": "Ttilde", "E~": "Etilde"}[flavor]
    header = ["x"]
    for j in js:
        col = f"{name}_{{{j},{m}}}"
        header += [col] if base == "T" else [col + "_re", col + "_im"]
    rows = []
    for x in xs:
        row = [_fmt(x)]
        for j in js:
            v = value(j, x)
            row += [_fmt(v)] if base == "T" else [_fmt(v.real), _fmt(v.imag)]
        rows.append(row)
    _write_csv(args.out, header, rows)
    return 0


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    hs = args.h or [1.0]
    seed = args.seed
    if seed is None:
        env = os.environ.get("HTRIG_SEED")
        try:
            seed = int(env) if env else DEFAULT_SEED
        except ValueError as exc:
            raise UsageError(f"HTRIG_SEED must be an integer, got {env!r}") from exc
    if seed < 0:
        raise UsageError("seed must be a non-negative integer")
    reports = []
    for h in hs:
        for name in names:
            reports.append(run_suite(name, h, seed, args.samples, args.tol))
    ok = all(r.passed for r in reports)
    if args.json:
        payload = [r.to_dict() for r in reports]
        text = json.dumps(payload, indent=2)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite} h={r.h!r} cases={r.cases} max={r.max_residual:.3e} "
              f"mean={r.mean_residual:.3e} tol={r.tol:.0e}", file=sys.stderr)
    return 0 if ok else 1


def cmd_converge(args) -> int:
    knots = parse_knots(args.knots)
    if args.halvings < 0:
        raise UsageError("--halvings must be >= 0")
    if args.points < 1:
        raise UsageError("--points must be >= 1")
    hs, errs, ratios = convergence_table(knots, args.order, args.h_start, args.halvings, args.points)
    rows = []
    for k, (h, e) in enumerate(zip(hs, errs)):
        ratio = _fmt(errs[k - 1] / e) if k and e else ""
        rows.append([_fmt(h), _fmt(e), ratio])
    _write_csv(args.out, ["h", "max_error", "ratio"], rows)
    return 0


def _write_csv(out, header, rows):
    if out in (None, "-"):
        fh, close = sys.stdout, False
    else:
        fh, close = open(out, "w", newline="", encoding="utf-8"), True
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    finally:
        if close:
            fh.close()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="htrig", description="h-trigonometric B-splines and h-calculus identities")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sample", help="sample a B-spline basis to CSV")
    s.add_argument("--h", type=float, required=True)
    s.add_argument("--knots", required=True, help="comma list or @file")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--from", dest="x_from", type=float, required=True)
    s.add_argument("--to", dest="x_to", type=float, required=True)
    s.add_argument("--step", type=float, required=True)
    s.add_argument("--out", default="-")
    s.add_argument("--flavor", choices=FLAVORS, default="T")
    s.add_argument("--method", choices=("recurrence", "definition"), default="recurrence")
    s.set_defaults(func=cmd_sample)

    c = sub.add_parser("check", help="run seeded identity suites")
    c.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    c.add_argument("--h", type=float, action="append")
    c.add_argument("--seed", type=int)
    c.add_argument("--samples", type=int)
    c.add_argument("--tol", type=float)
    c.add_argument("--json", nargs="?", const="-", default=None,
                   help="write reports as JSON to a file, or stdout when no path is given")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("converge", help="h -> 0 convergence to the classical spline")
    v.add_argument("--knots", required=True)
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--h-start", type=float, default=0.1)
    v.add_argument("--halvings", type=int, default=6)
    v.add_argument("--points", type=int, default=400)
    v.add_argument("--out", default="-")
    v.set_defaults(func=cmd_converge)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "samples", None) is not None and args.samples < 1:
            raise UsageError("--samples must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"htrig: error: {exc}", file=sys.stderr)
        return 2
    except (HTrigError, ValueError) as exc:
        print(f"htrig: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
