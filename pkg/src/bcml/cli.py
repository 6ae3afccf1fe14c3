"""Command-line front end.

    bcml eval   -- evaluate ml / pdf / mgf / moment / mean / variance
    bcml verify -- run the oracle verification suite over a grid
    bcml grid   -- sweep parameters and emit a deterministic CSV

Exit codes: 0 success, 1 verification failures, 2 invalid arguments or
parameters, 3 series non-convergence.  BCML_THREADS caps grid-sweep
parallelism (0 or unset = auto).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import oracles
from .bicomplex import Bicomplex, DomainError, NullConeError
from .distribution import (InvalidParameterError, MLDistParams, mean, mgf,
                           moment, pdf, variance)
from .special import ml_bicomplex

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_NOT_CONVERGED = 3


def _parse_components(text: str) -> Bicomplex:
    """Parse 'x0[,x1[,x2[,x3]]]' into a Bicomplex."""
    parts = [float(s) for s in text.split(",")]
    if not 1 <= len(parts) <= 4:
        raise ValueError(f"expected 1..4 comma-separated reals, got {text!r}")
    parts += [0.0] * (4 - len(parts))
    return Bicomplex.from_components(*parts)


def _parse_idempotent(text: str) -> Bicomplex:
    """Parse 're1,im1;re2,im2' into a Bicomplex."""
    halves = text.split(";")
    if len(halves) != 2:
        raise ValueError(f"expected 're1,im1;re2,im2', got {text!r}")
    comps = []
    for half in halves:
        vals = [float(s) for s in half.split(",")]
        if len(vals) == 1:
            vals.append(0.0)
        if len(vals) != 2:
            raise ValueError(f"expected 're,im' in {half!r}")
        comps.append(complex(*vals))
    return Bicomplex.from_idempotent(*comps)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _get_bicomplex(args, name: str, default=None) -> Bicomplex:
    plain = getattr(args, name, None)
    idem = getattr(args, f"{name}_idem", None)
    if plain is not None and idem is not None:
        raise ValueError(f"give either --{name} or --{name}-idem, not both")
    if idem is not None:
        return _parse_idempotent(idem)
    if plain is not None:
        return _parse_components(plain)
    if default is None:
        raise ValueError(f"missing required flag --{name}")
    return Bicomplex.coerce(default)


def _value_dict(value: Bicomplex, idempotent: bool) -> dict:
    d = value.to_json_dict()
    if idempotent:
        xi1, xi2 = value.to_idempotent()
        d["idempotent"] = {"xi1": {"re": xi1.real, "im": xi1.imag},
                           "xi2": {"re": xi2.real, "im": xi2.imag}}
    return d


def _thread_count() -> int:
    raw = os.environ.get("BCML_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


# ---------------------------------------------------------------------
# eval


def cmd_eval(args) -> int:
    what = args.what
    tol = args.tol
    max_terms = args.max_terms
    extra: dict = {}

    if what == "ml":
        alpha = _get_bicomplex(args, "alpha")
        xi = _get_bicomplex(args, "xi")
        res = ml_bicomplex(alpha, xi, tol, max_terms)
        if not res.converged:
            print("series did not converge within "
                  f"{max_terms} terms (error estimate {res.error_estimate:g})",
                  file=sys.stderr)
            return EXIT_NOT_CONVERGED
        value = res.value
        extra = {"terms_used": res.terms_used,
                 "error_estimate": res.error_estimate}
    else:
        p = MLDistParams(_get_bicomplex(args, "a"),
                         _get_bicomplex(args, "alpha"))
        if what == "pdf":
            res = pdf(_get_bicomplex(args, "xi"), p, tol, max_terms)
            if not res.converged:
                print("pdf series did not converge", file=sys.stderr)
                return EXIT_NOT_CONVERGED
            value = res.value
            extra = {"terms_used": res.terms_used,
                     "error_estimate": res.error_estimate}
        elif what == "mgf":
            result = mgf(_get_bicomplex(args, "t", default=0.0), p)
            value = result.value
            if not result.in_convergence_region:
                extra = {"analytic_continuation": True}
        elif what == "moment":
            value = moment(args.r, p)
        elif what == "mean":
            value = mean(p)
        else:  # variance
            value = variance(p)

    out = _value_dict(value, args.idempotent)
    out.update(extra)
    print(json.dumps(out))
    return EXIT_OK


# ---------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.grid == "default":
        grid = oracles.load_default_grid()
    else:
        try:
            with open(args.grid) as fh:
                grid = oracles.grid_from_json(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            print(f"cannot read grid file {args.grid!r}: {exc}",
                  file=sys.stderr)
            return EXIT_INVALID

    report = oracles.verify_all(grid)
    print(report.to_table())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
        print(f"report written to {args.json}")
    if report.failed:
        print(f"\nFAILED checks: {len(report.failed)}")
        for e in report.failed:
            print(f"  {e.check} at {e.point}: rel_error={e.rel_error:.3e} "
                  f"tol={e.tolerance:g}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------
# grid


def _parse_sweep(text: str) -> tuple[str, float, float, int]:
    try:
        name, spec = text.split("=")
        start_s, stop_s, steps_s = spec.split(":")
        name = name.strip()
        start, stop, steps = float(start_s), float(stop_s), int(steps_s)
    except ValueError as exc:
        raise ValueError(
            f"sweep must look like name=start:stop:steps, got {text!r}"
        ) from exc
    if name not in ("a", "alpha", "t", "xi"):
        raise ValueError(f"unknown sweep parameter {name!r}")
    if steps < 2:
        raise ValueError("sweep needs steps >= 2")
    if not start < stop:
        raise ValueError("sweep needs start < stop")
    return name, start, stop, steps


def _sweep_values(start: float, stop: float, steps: int) -> list[float]:
    step = (stop - start) / (steps - 1)
    return [start + i * step for i in range(steps)]


def _eval_grid_point(what: str, fixed: dict, r: int,
                     tol: float, max_terms: int) -> Bicomplex:
    if what == "ml":
        res = ml_bicomplex(fixed["alpha"], fixed["xi"], tol, max_terms)
        return res.value
    p = MLDistParams(fixed["a"], fixed["alpha"])
    if what == "pdf":
        return pdf(fixed["xi"], p, tol, max_terms).value
    if what == "mgf":
        return mgf(fixed["t"], p).value
    if what == "moment":
        return moment(r, p)
    if what == "mean":
        return mean(p)
    return variance(p)


def cmd_grid(args) -> int:
    sweeps = [_parse_sweep(s) for s in args.sweep]
    if not 1 <= len(sweeps) <= 2:
        print("need one or two --sweep flags", file=sys.stderr)
        return EXIT_INVALID
    if len(sweeps) == 2 and sweeps[0][0] == sweeps[1][0]:
        print("swept parameters must be distinct", file=sys.stderr)
        return EXIT_INVALID

    fixed = {
        "a": _get_bicomplex(args, "a", default=0.0),
        "alpha": _get_bicomplex(args, "alpha", default=1.0),
        "t": _get_bicomplex(args, "t", default=0.0),
        "xi": _get_bicomplex(args, "xi", default=1.0),
    }

    axes = [_sweep_values(start, stop, steps)
            for _, start, stop, steps in sweeps]
    if len(axes) == 1:
        tasks = [(v1, None) for v1 in axes[0]]
    else:
        tasks = [(v1, v2) for v1 in axes[0] for v2 in axes[1]]

    def run(task):
        v1, v2 = task
        point = dict(fixed)
        point[sweeps[0][0]] = Bicomplex.coerce(v1)
        if v2 is not None:
            point[sweeps[1][0]] = Bicomplex.coerce(v2)
        try:
            value = _eval_grid_point(args.what, point, args.r,
                                     args.tol, args.max_terms)
            return v1, v2, value.components(), None
        except (ValueError, ArithmeticError) as exc:
            return v1, v2, (math.nan,) * 4, str(exc)

    n_threads = _thread_count()
    if n_threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            rows = list(pool.map(run, tasks))
    else:
        rows = [run(t) for t in tasks]

    n_failed = 0
    lines = []
    header = "p1,p2,x0,x1,x2,x3" if len(axes) == 2 else "p1,x0,x1,x2,x3"
    lines.append(header)
    for v1, v2, comps, err in rows:
        if err is not None:
            n_failed += 1
            print(f"warning: point p1={v1:g}"
                  + (f" p2={v2:g}" if v2 is not None else "")
                  + f" failed: {err}", file=sys.stderr)
        cells = [_fmt(v1)]
        if v2 is not None:
            cells.append(_fmt(v2))
        cells.extend(_fmt(c) for c in comps)
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"

    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if n_failed == len(tasks):
        print("all grid points failed", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcml",
        description="Bicomplex Mittag-Leffler distribution toolkit")
    parser.add_argument("--tol", type=float, default=1e-12,
                        help="series truncation tolerance")
    parser.add_argument("--max-terms", type=int, default=10_000,
                        help="series term cap")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_bicomplex_flags(p, names):
        for name in names:
            p.add_argument(f"--{name}", help=f"{name} as x0[,x1,x2,x3]")
            p.add_argument(f"--{name}-idem", dest=f"{name}_idem",
                           help=f"{name} as idempotent 're1,im1;re2,im2'")

    pe = sub.add_parser("eval", help="evaluate a single quantity")
    pe.add_argument("what", choices=["ml", "pdf", "mgf", "moment",
                                     "mean", "variance"])
    add_bicomplex_flags(pe, ["a", "alpha", "t", "xi"])
    pe.add_argument("--r", type=int, default=1, help="moment order (0..4)")
    pe.add_argument("--idempotent", action="store_true",
                    help="also print the (xi1, xi2) pair")
    pe.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", help="run the oracle verification suite")
    pv.add_argument("--grid", default="default",
                    help="'default' or a JSON grid file")
    pv.add_argument("--json", help="write the JSON report to this path")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("grid", help="sweep parameters, emit CSV")
    pg.add_argument("what", choices=["ml", "pdf", "mgf", "moment",
                                     "mean", "variance"])
    pg.add_argument("--sweep", action="append", default=[],
                    help="name=start:stop:steps (repeat for 2-D)", )
    add_bicomplex_flags(pg, ["a", "alpha", "t", "xi"])
    pg.add_argument("--r", type=int, default=1, help="moment order (0..4)")
    pg.add_argument("--out", help="output CSV path (default stdout)")
    pg.set_defaults(func=cmd_grid)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, NullConeError, DomainError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
