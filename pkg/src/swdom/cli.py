"""Command-line interface: ``swdom <command> ...``.

Exit status is 0 on success, 1 when a search contradicts the closed form or a
check fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys

import numpy as np

from . import __version__, regions
from .falsifier import SearchConfig, falsify
from .law import R_STAR, check_order_properties, dominated_set, dominates_closed_form
from .tnorms import as_param, as_unit, dominance_gap, sugeno_weber
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _param(text: str) -> float:
    try:
        return as_param(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad parameter {text!r}: {exc}") from None


def _unit(text: str) -> float:
    try:
        return as_unit(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coordinate {text!r}: {exc}") from None


def _finite(text: str) -> float:
    value = _param(text)
    if math.isinf(value):
        raise argparse.ArgumentTypeError("range bounds must be finite")
    return value


def _num(x: float) -> str:
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return f"{x:.17g}"


def _json_obj(d: dict) -> str:
    parts = []
    for k, v in d.items():
        if isinstance(v, dict):
            val = _json_obj(v)
        elif v is None:
            val = "null"
        elif isinstance(v, bool):
            val = "true" if v else "false"
        elif isinstance(v, float):
            val = _num(v)
        else:
            val = f'"{v}"'
        parts.append(f'"{k}": {val}')
    return "{" + ", ".join(parts) + "}"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="swdom", description="Dominance between Sugeno-Weber t-norms.")
    p.add_argument("--version", action="version", version=f"swdom {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(sp):
        sp.add_argument("lam", type=_param, help="parameter of the dominating t-norm (number or inf)")
        sp.add_argument("mu", type=_param, help="parameter of the dominated t-norm (number or inf)")

    def out(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    pair(sub.add_parser("check", help="closed-form verdict"))

    sp = sub.add_parser("falsify", help="numerical search for a counterexample")
    pair(sp)
    sp.add_argument("--grid", type=int, default=48)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("gap", help="signed dominance gap at a point")
    pair(sp)
    for name in ("x", "y", "u", "v"):
        sp.add_argument(name, type=_unit)

    sp = sub.add_parser("region", help="export closed-form verdicts on a grid")
    for name in ("lam_lo", "lam_hi", "mu_lo", "mu_hi"):
        sp.add_argument(name, type=_finite)
    sp.add_argument("-n", type=int, default=100, help="points per axis")
    sp.add_argument("--scale", choices=regions.SCALES, default="log")
    out(sp)

    sp = sub.add_parser("boundary", help="export samples of the boundary curve")
    sp.add_argument("mu_lo", type=_finite)
    sp.add_argument("mu_hi", type=_finite)
    sp.add_argument("-n", type=int, default=200)
    out(sp)

    sp = sub.add_parser("dominated-set", help="parameters dominated by alpha")
    sp.add_argument("alpha", type=_param)

    sp = sub.add_parser("transitivity", help="order properties on random parameters")
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("verify", help="run a self-check suite")
    sp.add_argument("suite", choices=[*SUITES, "all"])
    sp.add_argument("--seed", type=int, default=0)

    sub.add_parser("rstar", help="print the Mulholland constant r*")
    return p


def _random_params(count: int, seed: int) -> list[float]:
    rng = np.random.default_rng(seed)
    # log-uniform over [1e-3, 1e3] with the special points mixed in
    ps = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), count)).tolist()
    return ps + [0.0, 9.0, 16.0, 121.0, math.inf]


def run(args) -> int:
    cmd = args.command
    if cmd == "check":
        print(dominates_closed_form(args.lam, args.mu))
        return 0
    if cmd == "falsify":
        try:
            cfg = SearchConfig(grid_n=args.grid, tol=args.tol, seed=args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        res = falsify(args.lam, args.mu, cfg)
        verdict = dominates_closed_form(args.lam, args.mu)
        report = {
            "outcome": "violation-found" if res.violation_found else "no-violation-found",
            "closed_form": str(verdict),
            "witness": res.witness.to_json() if res.witness else None,
            "min_gap": res.min_gap,
        }
        print(_json_obj(report))
        return 1 if res.violation_found and verdict.dominates else 0
    if cmd == "gap":
        g = dominance_gap(sugeno_weber(args.lam), sugeno_weber(args.mu), args.x, args.y, args.u, args.v)
        print(f"{g:.17g}")
        return 0
    if cmd in ("region", "boundary"):
        try:
            if cmd == "region":
                obj = regions.sample_region((args.lam_lo, args.lam_hi), (args.mu_lo, args.mu_hi), args.n, args.scale)
            else:
                obj = regions.boundary_curve(args.mu_lo, args.mu_hi, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        regions.export(obj, args.format, args.out or sys.stdout)
        return 0
    if cmd == "dominated-set":
        print(dominated_set(args.alpha))
        return 0
    if cmd == "transitivity":
        if args.count < 1:
            raise UsageError("--count must be positive")
        rep = check_order_properties(_random_params(args.count, args.seed))
        for name in ("reflexive", "antisymmetric", "transitive", "comparability"):
            print(f"{name}: {'yes' if getattr(rep, name) else 'no'}")
        if rep.violating_triple:
            print("violating triple: " + ", ".join(f"{t:.17g}" for t in rep.violating_triple))
        return 0 if rep.ok else 1
    if cmd == "verify":
        results = run_suite(args.suite, args.seed)
        for label, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        return 0 if all(ok for _, ok, _ in results) else 1
    if cmd == "rstar":
        print(f"{R_STAR:.12g}")
        return 0
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
        return run(args)
    except UsageError as exc:
        print(f"swdom: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"swdom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
