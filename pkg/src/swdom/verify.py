"""Self-check suites run by ``swdom verify``.

Each suite is a list of named checks; a check returns ``(ok, detail)``.  The
suites are quick, seeded and deterministic.  The full acceptance runs live in
the test suite.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import falsifier as fz
from .law import (
    R_CRIT,
    R_STAR,
    check_order_properties,
    dominates_closed_form,
    dominates_equiv_form,
    f_eval,
    mulholland_g,
    sufficient_mulholland,
)
from .tnorms import LUKASIEWICZ, PRODUCT, Classification, family_class, sw_gap, tsw_eval

Check = Callable[[np.random.Generator], tuple[bool, str]]

PARAMS = (0.0, 0.25, 1.0, 3.0, 16.0, 121.0, math.inf)


def _tnorm_axioms(rng):
    pts = rng.uniform(0, 1, (300, 3))
    worst = 0.0
    for lam in PARAMS:
        for a, b, c in pts:
            t = lambda p, q: tsw_eval(lam, p, q)  # noqa: E731
            worst = max(
                worst,
                abs(t(a, b) - t(b, a)),
                abs(t(a, t(b, c)) - t(t(a, b), c)),
                abs(t(a, 1.0) - a),
            )
            lo, hi = sorted((b, c))
            if t(a, lo) > t(a, hi) + 1e-15:
                return False, f"monotonicity fails for lambda={lam}"
    return worst <= 1e-12, f"max axiom residual {worst:.3g}"


def _tnorm_members(rng):
    pts = rng.uniform(0, 1, (200, 2))
    ok = all(tsw_eval(0, u, v) == PRODUCT(u, v) for u, v in pts)
    ok &= all(abs(tsw_eval(1, u, v) - LUKASIEWICZ(u, v)) <= 1e-15 for u, v in pts)
    ok &= all(tsw_eval(math.inf, u, v) == 0.0 for u, v in pts)
    ok &= tsw_eval(math.inf, 1.0, 0.3) == 0.3
    return ok, "lambda=0 product, lambda=1 Lukasiewicz, lambda=inf drastic"


def _tnorm_classes(rng):
    got = [family_class(x) for x in (0, 2.5, math.inf)]
    want = [Classification.STRICT, Classification.NILPOTENT, Classification.NOT_CONTINUOUS]
    return got == want, "strict / nilpotent / not continuous"


def _fixpoint(rng):
    err = abs(f_eval(R_CRIT) - R_CRIT)
    return err <= 1e-12 and f_eval(16) == 121.0 and abs(f_eval(121) - 16) <= 1e-12, f"|f(r) - r| = {err:.3g}"


def _involution(rng):
    xs = 9.0 + 1e-6 + rng.uniform(0, 1, 2000) * (1e6 - 9.0 - 1e-6)
    worst = max(abs(f_eval(f_eval(x)) - x) / x for x in xs)
    return worst <= 1e-9, f"max relative |f(f(x)) - x| = {worst:.3g}"


def _rstar(rng):
    return abs(R_STAR - 6.00914) <= 1e-4 and abs(mulholland_g(R_STAR)) <= 1e-9, f"r* = {R_STAR:.12f}"


def _cross_form(rng):
    grid = np.geomspace(1e-3, 1e3, 120).tolist() + [0.0, math.inf]
    bad = [(a, b) for a in grid for b in grid if bool(dominates_closed_form(a, b)) != dominates_equiv_form(a, b)]
    return not bad, f"{len(bad)} disagreements"


def _sufficiency(rng):
    grid = np.geomspace(1e-3, 1e3, 120)
    bad = [(a, b) for a in grid for b in grid if sufficient_mulholland(a, b) and not dominates_closed_form(a, b)]
    return not bad and not sufficient_mulholland(2, 7) and bool(dominates_closed_form(2, 7)), f"{len(bad)} counterexamples"


def _order(rng):
    reports = [check_order_properties([0, 1, 5, 16, 50, 121, math.inf])]
    reports += [check_order_properties(np.exp(rng.uniform(-5, 7, 60))) for _ in range(3)]
    bad = [r.violating_triple for r in reports if not r.ok]
    return not bad, "partial order" if not bad else f"violations {bad}"


def _falsify_cases(rng):
    cfg = fz.SearchConfig(grid_n=24, seed=int(rng.integers(2**31)))
    out = []
    for lam, mu in ((0.0, 7.0), (2.0, 10.0), (16.0, 121.0), (17.0, 121.0), (20.0, 100.0), (50.0, 40.0)):
        found = fz.falsify(lam, mu, cfg).violation_found
        out.append(found == (not dominates_closed_form(lam, mu)))
    return all(out), f"{sum(out)}/{len(out)} cells agree"


def _witness_valid(rng):
    from .tnorms import dominance_gap, sugeno_weber

    r = fz.falsify(20.0, 100.0, fz.SearchConfig(grid_n=24))
    if r.witness is None:
        return False, "no witness"
    g = dominance_gap(sugeno_weber(20.0), sugeno_weber(100.0), *r.witness.point)
    return g < -1e-9 and abs(g - r.witness.gap) <= 1e-14, f"gap {g:.17g}"


def _reduced_roundtrip(rng):
    cfg = fz.SearchConfig(grid_n=16)
    w = fz.reduced_search(17.0, 121.0, cfg)
    if w is None:
        return False, "no reduced witness"
    p = fz.map_reduced_to_raw(17.0, 121.0, w)
    g = sw_gap(17.0, 121.0, *p)
    none_small = fz.reduced_search(0.5, 7.0, cfg, use_ineq_a=False) is None
    return g < 0 and none_small, f"mapped gap {g:.3g}"


def _identity(rng):
    worst = 0.0
    for _ in range(2000):
        lam, mu = rng.uniform(0, 50, 2)
        x, y, u, v = rng.uniform(-2, 2, 4)
        a, b = fz.unclamped_sides(lam, mu, x, y, u, v)
        worst = max(worst, abs(fz.identity_residual(lam, mu, x, y, u, v)) / (1 + abs(a - b)))
    return worst <= 1e-9, f"max relative residual {worst:.3g}"


SUITES: dict[str, list[tuple[str, Check]]] = {
    "tnorms": [
        ("axioms", _tnorm_axioms),
        ("family members", _tnorm_members),
        ("classification", _tnorm_classes),
    ],
    "law": [
        ("fixpoint", _fixpoint),
        ("involution", _involution),
        ("r*", _rstar),
        ("equivalent form", _cross_form),
        ("sufficient condition", _sufficiency),
        ("order properties", _order),
    ],
    "falsifier": [
        ("oracle cells", _falsify_cases),
        ("witness validity", _witness_valid),
        ("reduced round trip", _reduced_roundtrip),
        ("factorization identity", _identity),
    ],
}


def run_suite(name: str, seed: int = 0) -> list[tuple[str, bool, str]]:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for n in names:
        for label, check in SUITES[n]:
            ok, detail = check(np.random.default_rng(seed))
            results.append((f"{n}: {label}", bool(ok), detail))
    return results
