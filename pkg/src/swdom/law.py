"""Closed-form dominance between Sugeno-Weber t-norms.

``dominates_closed_form`` is the decision procedure everything else is
checked against.  ``dominates_equiv_form`` restates the same relation through
the inequality ``1 + sqrt(lam*mu) <= 3 (sqrt(lam) + sqrt(mu))`` and is kept as
an independently written cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .tnorms import as_param

#: Above this parameter dominance needs ``lam <= f(mu)``; equals (3 + 2 sqrt 2)**2.
R_CRIT = 17.0 + 12.0 * math.sqrt(2.0)


def mulholland_g(t: float) -> float:
    lt = math.log(t)
    return lt * lt + lt - t + 1.0


def r_star(lo: float = 2.0, hi: float = 10.0, tol: float = 1e-10) -> float:
    """Second root of ``ln(t)**2 + ln(t) - t + 1`` by bisection."""
    g_lo = mulholland_g(lo)
    if not (g_lo > 0.0 > mulholland_g(hi)):
        raise ValueError(f"[{lo}, {hi}] does not bracket the root")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = mulholland_g(mid)
        if g_mid == 0.0:
            return mid
        if g_mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


R_STAR = r_star()


def f_eval(x: float) -> float:
    """Boundary involution ``((1 - 3 sqrt x) / (3 - sqrt x))**2`` on ``(9, inf)``."""
    x = float(x)
    if not x > 9.0:
        raise ValueError(f"f is defined on (9, inf), got {x!r}")
    if math.isinf(x):
        return 9.0
    s = math.sqrt(x)
    return ((1.0 - 3.0 * s) / (3.0 - s)) ** 2


def beta_of(alpha: float) -> float:
    """Right end of the dominated interval for ``alpha`` in ``(9, R_CRIT]``."""
    alpha = float(alpha)
    if not 9.0 < alpha <= R_CRIT:
        raise ValueError(f"beta is defined on (9, {R_CRIT!r}], got {alpha!r}")
    return f_eval(alpha)


class Condition(enum.Enum):
    """Which clause of the characterization certifies dominance."""

    LAMBDA_ZERO = "i"
    MU_INFINITY = "ii"
    EQUAL = "iii"
    BELOW_CRITICAL = "iv"
    BOUNDARY_FUNCTION = "v"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    dominates: bool
    condition: Condition | None = None

    def __bool__(self):
        return self.dominates

    def __str__(self):
        if self.dominates:
            return f"dominates ({self.condition})"
        return "does-not-dominate"


DOES_NOT_DOMINATE = Verdict(False)


def dominates_closed_form(lam, mu) -> Verdict:
    lam, mu = as_param(lam), as_param(mu)
    if lam == 0.0:
        return Verdict(True, Condition.LAMBDA_ZERO)
    if mu == math.inf:
        return Verdict(True, Condition.MU_INFINITY)
    if lam == mu:
        return Verdict(True, Condition.EQUAL)
    if 0.0 < lam < mu <= R_CRIT:
        return Verdict(True, Condition.BELOW_CRITICAL)
    if mu > R_CRIT and 0.0 < lam <= f_eval(mu):
        return Verdict(True, Condition.BOUNDARY_FUNCTION)
    return DOES_NOT_DOMINATE


def dominates_equiv_form(lam, mu) -> bool:
    lam, mu = as_param(lam), as_param(mu)
    if lam == 0.0 or mu == math.inf or lam == mu:
        return True
    if lam == math.inf:
        return False
    if 0.0 < lam < min(mu, 1.0):
        return True
    return 0.0 < lam < mu and 1.0 + math.sqrt(lam * mu) <= 3.0 * (math.sqrt(lam) + math.sqrt(mu))


def sufficient_mulholland(lam, mu) -> bool:
    lam, mu = as_param(lam), as_param(mu)
    return lam <= min(1.0, mu) or 1.0 < lam <= mu <= R_STAR


class Shape(enum.Enum):
    FULL_TAIL = "full-tail"
    INTERVAL_PLUS_INFINITY = "interval-plus-infinity"
    SELF_AND_INFINITY = "self-and-infinity"


@dataclass(frozen=True)
class DominatedSet:
    """Parameters ``beta`` with ``T_alpha >> T_beta``."""

    alpha: float
    shape: Shape
    beta: float

    def __contains__(self, beta) -> bool:
        beta = as_param(beta)
        if beta == math.inf:
            return True
        if self.shape is Shape.FULL_TAIL:
            return beta >= self.alpha
        if self.shape is Shape.INTERVAL_PLUS_INFINITY:
            return self.alpha <= beta <= self.beta
        return beta == self.alpha

    contains = __contains__

    def __str__(self):
        a = f"{self.alpha:.17g}"
        if self.shape is Shape.FULL_TAIL:
            return f"[{a}, inf]"
        if self.shape is Shape.INTERVAL_PLUS_INFINITY:
            return f"[{a}, {self.beta:.17g}] U {{inf}}"
        return f"{{{a}, inf}}"


def dominated_set(alpha) -> DominatedSet:
    alpha = as_param(alpha)
    if alpha <= 9.0:
        return DominatedSet(alpha, Shape.FULL_TAIL, math.inf)
    if alpha < R_CRIT:
        return DominatedSet(alpha, Shape.INTERVAL_PLUS_INFINITY, beta_of(alpha))
    return DominatedSet(alpha, Shape.SELF_AND_INFINITY, alpha)


@dataclass
class OrderReport:
    params: list[float]
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    comparability: bool
    violating_triple: tuple[float, float, float] | None = None

    @property
    def ok(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive and self.comparability


def relation_matrix(params: Sequence[float]) -> np.ndarray:
    return np.array(
        [[dominates_closed_form(a, b).dominates for b in params] for a in params], dtype=bool
    ).reshape(len(params), len(params))


def check_order_properties(params: Iterable) -> OrderReport:
    """Check that closed-form dominance restricted to ``params`` is a partial order
    contained in the usual order of parameters."""
    ps = sorted(set(as_param(p) for p in params))
    rel = relation_matrix(ps)
    order = np.array(ps)
    off_diag = ~np.eye(len(ps), dtype=bool)
    reflexive = bool(rel.diagonal().all())
    antisymmetric = not bool((rel & rel.T & off_diag).any())
    comparability = bool((order[:, None] <= order[None, :])[rel].all())
    r = rel.astype(np.int64)
    # (i, k) reachable in two steps but not related directly
    broken = np.argwhere((r @ r > 0) & ~rel)
    violating = None
    if len(broken):
        i, k = broken[0]
        j = int(np.flatnonzero(rel[i] & rel[:, k])[0])
        violating = (ps[i], ps[j], ps[k])
    return OrderReport(ps, reflexive, antisymmetric, violating is None, comparability, violating)
