"""Sugeno-Weber t-norms, the four basic t-norms and the raw dominance expressions.

Parameters live in ``[0, inf]`` and are plain floats (``math.inf`` is the
drastic end of the family). Arguments of a t-norm live in ``[0, 1]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

UNIT_SLACK = 1e-12


class Classification(enum.Enum):
    STRICT = "strict"
    NILPOTENT = "nilpotent"
    NOT_CONTINUOUS = "not-continuous"


def as_param(value) -> float:
    """Validate a family parameter; accepts numbers and the strings ``"inf"``/``"infinity"``."""
    if type(value) is float and value >= 0.0:  # fast path; NaN fails the comparison
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "+inf"):
            return math.inf
        value = float(text)
    value = float(value)
    if math.isnan(value):
        raise ValueError("parameter is NaN")
    if value < 0.0:
        raise ValueError(f"parameter must be nonnegative, got {value!r}")
    return value


def as_unit(value) -> float:
    """Validate a point of the unit interval.

    Values within ``UNIT_SLACK`` outside ``[0, 1]`` are treated as round-off
    and snapped onto the interval; anything further out is an error.
    """
    value = float(value)
    if math.isnan(value) or value < -UNIT_SLACK or value > 1.0 + UNIT_SLACK:
        raise ValueError(f"{value!r} is outside the unit interval")
    return min(1.0, max(0.0, value))


def _sw(lam: float, u: float, v: float) -> float:
    # keep the operation order in sync with the compiled kernels
    t = (1.0 - lam) * u * v + lam * (u + v - 1.0)
    return t if t > 0.0 else 0.0


def t_min(u: float, v: float) -> float:
    return u if u < v else v


def t_prod(u: float, v: float) -> float:
    return u * v


def t_luk(u: float, v: float) -> float:
    t = u + v - 1.0
    return t if t > 0.0 else 0.0


def t_drastic(u: float, v: float) -> float:
    if u == 1.0:
        return v
    if v == 1.0:
        return u
    return 0.0


def tsw_eval(lam, u, v) -> float:
    """Sugeno-Weber t-norm with parameter ``lam`` at ``(u, v)``."""
    lam = as_param(lam)
    u, v = as_unit(u), as_unit(v)
    if lam == 0.0:
        return t_prod(u, v)
    if lam == math.inf:
        return t_drastic(u, v)
    # round-off can push the value a few ulps above min(u, v), even past 1
    return min(_sw(lam, u, v), u, v)


class Kind(enum.Enum):
    MINIMUM = "minimum"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"
    DRASTIC = "drastic"
    SUGENO_WEBER = "sugeno-weber"


_BASIC = {
    Kind.MINIMUM: t_min,
    Kind.PRODUCT: t_prod,
    Kind.LUKASIEWICZ: t_luk,
    Kind.DRASTIC: t_drastic,
}


@dataclass(frozen=True)
class TNorm:
    """Identifier of a t-norm; call it to evaluate."""

    kind: Kind
    param: float | None = None

    def __post_init__(self):
        if self.kind is Kind.SUGENO_WEBER:
            object.__setattr__(self, "param", as_param(self.param))
        elif self.param is not None:
            raise ValueError(f"{self.kind.value} takes no parameter")

    def __call__(self, u, v) -> float:
        return tnorm_eval(self, u, v)

    def __str__(self):
        if self.kind is Kind.SUGENO_WEBER:
            return f"T_SW^{self.param:g}"
        return self.kind.value


MINIMUM = TNorm(Kind.MINIMUM)
PRODUCT = TNorm(Kind.PRODUCT)
LUKASIEWICZ = TNorm(Kind.LUKASIEWICZ)
DRASTIC = TNorm(Kind.DRASTIC)


def sugeno_weber(lam) -> TNorm:
    return TNorm(Kind.SUGENO_WEBER, lam)


def tnorm_eval(tnorm: TNorm, u, v) -> float:
    if tnorm.kind is Kind.SUGENO_WEBER:
        return tsw_eval(tnorm.param, u, v)
    return _BASIC[tnorm.kind](as_unit(u), as_unit(v))


def family_class(lam) -> Classification:
    lam = as_param(lam)
    if lam == 0.0:
        return Classification.STRICT
    if lam == math.inf:
        return Classification.NOT_CONTINUOUS
    return Classification.NILPOTENT


class InnerTerms(NamedTuple):
    x1: float
    x2: float
    x3: float
    x4: float


def _finite(lam, mu) -> tuple[float, float]:
    lam, mu = as_param(lam), as_param(mu)
    if math.isinf(lam) or math.isinf(mu):
        raise ValueError("inner terms are only defined for finite parameters")
    return lam, mu


def inner_terms(lam, mu, x, y, u, v) -> InnerTerms:
    """Unclamped bilinear forms behind both sides of the dominance inequality."""
    lam, mu = _finite(lam, mu)
    x, y, u, v = map(as_unit, (x, y, u, v))
    return InnerTerms(
        (1.0 - lam) * u * x + lam * (u + x - 1.0),
        (1.0 - lam) * v * y + lam * (v + y - 1.0),
        (1.0 - mu) * u * v + mu * (u + v - 1.0),
        (1.0 - mu) * x * y + mu * (x + y - 1.0),
    )


def sides_AB(lam, mu, x, y, u, v) -> tuple[float, float]:
    """Outer arguments ``A`` (left side) and ``B`` (right side) before the final clamp."""
    x1, x2, x3, x4 = inner_terms(lam, mu, x, y, u, v)
    lam, mu = float(lam), float(mu)
    p3, p4 = max(0.0, x3), max(0.0, x4)
    p1, p2 = max(0.0, x1), max(0.0, x2)
    a = (1.0 - lam) * p3 * p4 + lam * (p3 + p4 - 1.0)
    b = (1.0 - mu) * p1 * p2 + mu * (p1 + p2 - 1.0)
    return a, b


def dominance_gap(t1: TNorm, t2: TNorm, x, y, u, v) -> float:
    """``T1(T2(x, y), T2(u, v)) - T2(T1(x, u), T1(y, v))``; ``t1`` dominates at the point iff >= 0."""
    lhs = tnorm_eval(t1, tnorm_eval(t2, x, y), tnorm_eval(t2, u, v))
    rhs = tnorm_eval(t2, tnorm_eval(t1, x, u), tnorm_eval(t1, y, v))
    return lhs - rhs


def sw_gap(lam: float, mu: float, x: float, y: float, u: float, v: float) -> float:
    """Dominance gap of two finite, nonzero family members without argument validation."""
    lhs = _sw(lam, _sw(mu, x, y), _sw(mu, u, v))
    rhs = _sw(mu, _sw(lam, x, u), _sw(lam, y, v))
    return lhs - rhs
