"""Numerical search for counterexamples to dominance.

Two independent routes look for a point where ``T_lam`` fails to dominate
``T_mu``:

* the *raw* route scans the dominance gap itself on an interior grid of the
  open unit 4-cube and refines the most promising cells;
* the *reduced* route searches the max-free polynomial system in
  ``(x, y, u, vt)`` to which the inequality reduces for ``0 < lam < mu``, and
  :func:`map_reduced_to_raw` carries any hit back to the original variables.

Neither route consults the closed form, so both can be used to test it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .kernels import backend
from .tnorms import DRASTIC, as_param, dominance_gap, sugeno_weber

log = logging.getLogger(__name__)

#: Distance kept from the faces of the cube during refinement.
EDGE = 2.0**-40
#: Upper bound for raw refinement.  Next to the corner (1, 1, 1, 1) both sides
#: of the inequality approach 1 and the search score loses all precision.
RAW_HI = 1.0 - 2.0**-17
MAP_SLACK = 1e-12


@dataclass(frozen=True)
class SearchConfig:
    grid_n: int = 48
    refine_iters: int = 200
    tol: float = 1e-9
    seed: int = 0
    starts: int = 16

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError("grid_n must be at least 2")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be nonnegative")
        if self.starts < 1:
            raise ValueError("starts must be positive")


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    u: float
    v: float
    gap: float

    @property
    def point(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.u, self.v)

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "u": self.u, "v": self.v, "gap": self.gap}


@dataclass(frozen=True)
class FalsifyResult:
    witness: Witness | None
    min_gap: float
    argmin: tuple[float, float, float, float]

    @property
    def violation_found(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class ReducedWitness:
    x: float
    y: float
    u: float
    v_tilde: float
    ineq_a: float
    ineq_b: float


def _check_open(lam: float, mu: float):
    if not (0.0 < lam < math.inf and 0.0 < mu < math.inf):
        raise ValueError("grid search needs 0 < lambda, mu < inf; the degenerate cases are settled in closed form")


def _grid(n: int) -> np.ndarray:
    return (np.arange(n, dtype=np.float64) + 0.5) / n


def _ranked(vals: np.ndarray, k: int) -> list[tuple[int, int]]:
    # stable sort on the flattened (i, j) array: ties go to the smaller index
    order = np.argsort(vals, axis=None, kind="stable")[:k]
    n = vals.shape[1]
    return [divmod(int(o), n) for o in order]


def grid_min_gap(lam, mu, cfg: SearchConfig = SearchConfig()):
    """Minimum of the dominance gap over the interior grid ``{(i + 1/2) / n}**4``.

    Returns ``(min_gap, argmin)``; ties resolve to the lexicographically
    smallest grid index.
    """
    lam, mu = as_param(lam), as_param(mu)
    _check_open(lam, mu)
    gvals, gidx, _, _ = backend.gap_slice_minima(lam, mu, cfg.grid_n)
    return _grid_argmin(gvals, gidx, _grid(cfg.grid_n))


def _grid_argmin(gvals, gidx, g):
    i, j = _ranked(gvals, 1)[0]
    k, l = gidx[i, j]
    return float(gvals[i, j]), (float(g[i]), float(g[j]), float(g[k]), float(g[l]))


def refine_witness(lam, mu, start, cfg: SearchConfig = SearchConfig()):
    """Descend from ``start``; returns ``(point, gap)`` with ``gap <= gap(start)``."""
    lam, mu = as_param(lam), as_param(mu)
    _check_open(lam, mu)
    point, value = backend.refine_gap(lam, mu, list(start), cfg.refine_iters, EDGE, RAW_HI)
    return tuple(point), value


def _starts(idx, ranked, g, rng, n, hi):
    """Cell centres of the ranked slices; all but the first are jittered within their cell."""
    pts = []
    for rank, (i, j) in enumerate(ranked):
        k, l = idx[i, j]
        p = np.array([g[i], g[j], g[k], g[l]])
        if rank:
            p = p + rng.uniform(-0.5, 0.5, 4) / n
        pts.append(np.clip(p, EDGE, hi))
    return pts


def falsify(lam, mu, cfg: SearchConfig = SearchConfig()) -> FalsifyResult:
    """Look for a point where ``T_SW^lam`` fails to dominate ``T_SW^mu``."""
    lam, mu = as_param(lam), as_param(mu)
    if lam == 0.0 or mu == math.inf or lam == mu:
        return FalsifyResult(None, 0.0, (1.0, 1.0, 1.0, 1.0))
    if lam == math.inf:
        return _falsify_drastic(mu, cfg)

    n = cfg.grid_n
    g = _grid(n)
    gvals, gidx, svals, sidx = backend.gap_slice_minima(lam, mu, n)
    best_gap, best_pt = _grid_argmin(gvals, gidx, g)
    rng = np.random.default_rng(cfg.seed)
    # grid argmin, best point of the diagonal (fixed by both symmetries of the
    # inequality), then the cells ranked by search score
    starts = [np.array(best_pt), backend.diagonal_start_raw(lam, mu, EDGE, RAW_HI)]
    starts += _starts(sidx, _ranked(svals, cfg.starts), g, rng, n, RAW_HI)
    for start in starts:
        point, value = backend.refine_gap(lam, mu, list(start), cfg.refine_iters, EDGE, RAW_HI)
        if value < best_gap:
            best_gap, best_pt = value, tuple(point)
    log.debug("falsify(%r, %r): min gap %.3g at %s", lam, mu, best_gap, best_pt)
    if best_gap < -cfg.tol:
        x, y, u, v = best_pt
        return FalsifyResult(Witness(x, y, u, v, best_gap), best_gap, best_pt)
    return FalsifyResult(None, best_gap, best_pt)


def _falsify_drastic(mu: float, cfg: SearchConfig) -> FalsifyResult:
    # In the open cube both sides vanish for the drastic product; the
    # counterexamples sit on the faces u = y = 1 where the left side is
    # T_D(x, v) = 0 and the right side T_mu(x, v).
    t1, t2 = DRASTIC, sugeno_weber(mu)
    best_gap, best_pt = 0.0, (1.0, 1.0, 1.0, 1.0)
    g = _grid(cfg.grid_n)
    for x in g:
        for v in g:
            val = dominance_gap(t1, t2, x, 1.0, 1.0, v)
            if val < best_gap:
                best_gap, best_pt = val, (float(x), 1.0, 1.0, float(v))
    if best_gap < -cfg.tol:
        return FalsifyResult(Witness(*best_pt, best_gap), best_gap, best_pt)
    return FalsifyResult(None, best_gap, best_pt)


# -- reduced route ---------------------------------------------------------


def reduced_terms(lam, mu, x, y, u, v_tilde) -> tuple[float, float]:
    """The two polynomials whose joint negativity characterizes non-dominance."""
    a = u * ((lam - 1) * x + 1) * ((mu - 1) * v_tilde + 1) + (mu - 1) * v_tilde * x + v_tilde + x - 1
    b = v_tilde * x * (1 - (lam - 1) * (mu - 1) * u * y) + y * ((lam - 1) * u * y * ((mu - 1) * x + 1) + u - x)
    return a, b


def reduced_violation(lam, mu, x, y, u, v_tilde, use_ineq_a: bool = True) -> bool:
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0 and 0.0 < u < 1.0 and y < v_tilde < 1.0 + lam * y):
        return False
    a, b = reduced_terms(lam, mu, x, y, u, v_tilde)
    return (a < 0.0 or not use_ineq_a) and b < 0.0


def reduced_search(lam, mu, cfg: SearchConfig = SearchConfig(), use_ineq_a: bool = True) -> ReducedWitness | None:
    """Search the reduced system for ``0 < lam < mu < inf``.

    The fourth axis is sampled as ``vt = y + t (1 + (lam - 1) y)`` with ``t``
    on the interior grid, so ``y < vt < 1 + lam y`` holds by construction.
    With ``use_ineq_a=False`` only the second inequality is required.
    """
    lam, mu = as_param(lam), as_param(mu)
    if not 0.0 < lam < mu < math.inf:
        raise ValueError("reduced search needs 0 < lambda < mu < inf")
    n = cfg.grid_n
    g = _grid(n)
    vals, idx = backend.reduced_slice_minima(lam, mu, n, use_ineq_a)
    rng = np.random.default_rng(cfg.seed)
    best, best_pt = math.inf, None
    starts = [backend.diagonal_start_reduced(lam, mu, EDGE, 1.0 - EDGE, use_ineq_a)]
    starts += _starts(idx, _ranked(vals, cfg.starts), g, rng, n, 1.0 - EDGE)
    for start in starts:
        point, value = backend.refine_reduced(
            lam, mu, list(start), cfg.refine_iters, EDGE, 1.0 - EDGE, use_ineq_a
        )
        if value < best:
            best, best_pt = value, point
    if best_pt is None or not best < -cfg.tol:
        return None
    x, y, u, t = best_pt
    vt = y + t * (1.0 + (lam - 1.0) * y)
    if not reduced_violation(lam, mu, x, y, u, vt, use_ineq_a):
        return None
    a, b = reduced_terms(lam, mu, x, y, u, vt)
    return ReducedWitness(x, y, u, vt, a, b)


def to_reduced(lam, x, y, u, v) -> tuple[float, float, float, float]:
    """Forward substitution from the original variables to ``(x, y, u, vt)``."""
    xs, ys, us, vs = 1.0 - x, 1.0 - y, 1.0 - u, 1.0 - v
    return xs, ys, us, (lam - 1.0) * vs * ys + vs + ys


def map_reduced_to_raw(lam, mu, w: ReducedWitness) -> tuple[float, float, float, float]:
    """Undo the substitutions: ``v = (vt - y) / (1 + (lam - 1) y)``, then reflect every coordinate."""
    v = (w.v_tilde - w.y) / (1.0 + (lam - 1.0) * w.y)
    point = (1.0 - w.x, 1.0 - w.y, 1.0 - w.u, 1.0 - v)
    for c in point:
        if not -MAP_SLACK < c < 1.0 + MAP_SLACK:
            raise ValueError(f"mapped point {point} leaves the unit cube")
    return tuple(min(1.0, max(0.0, c)) for c in point)


def unclamped_sides(lam, mu, x, y, u, v) -> tuple[float, float]:
    """Outer forms ``A`` and ``B`` built from the unclamped inner terms."""
    x1 = (1 - lam) * u * x + lam * (u + x - 1)
    x2 = (1 - lam) * v * y + lam * (v + y - 1)
    x3 = (1 - mu) * u * v + mu * (u + v - 1)
    x4 = (1 - mu) * x * y + mu * (x + y - 1)
    return (1 - lam) * x3 * x4 + lam * (x3 + x4 - 1), (1 - mu) * x1 * x2 + mu * (x1 + x2 - 1)


def identity_residual(lam, mu, x, y, u, v) -> float:
    """``(A - B)`` minus its factored form; vanishes identically.

    Meant for random identity testing, so the coordinates may be any reals.
    """
    a, b = unclamped_sides(lam, mu, x, y, u, v)
    factored = (mu - lam) * (
        (mu + lam * (1 - mu)) * (u - 1) * (v - 1) * (x - 1) * (y - 1) - ((u - 1) * y - u) * ((v - 1) * x - v) + 1
    )
    return (a - b) - factored
