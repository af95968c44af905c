"""Sampling of the dominance solution set in the (lambda, mu) plane and of its
boundary curve, with CSV/JSON export."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass
from typing import IO, Union

import numpy as np

from . import __version__
from .law import R_CRIT, R_STAR, Condition, Verdict, dominates_closed_form, f_eval

SCALES = ("linear", "log")


@dataclass(frozen=True)
class RegionGrid:
    lambdas: list[float]
    mus: list[float]
    verdicts: list[list[Verdict]]  # verdicts[i][j] belongs to (lambdas[i], mus[j])

    def records(self):
        for i, lam in enumerate(self.lambdas):
            for j, mu in enumerate(self.mus):
                v = self.verdicts[i][j]
                yield lam, mu, v.dominates, (v.condition.value if v.condition else "")

    def dominating_fraction(self) -> float:
        hits = sum(v.dominates for row in self.verdicts for v in row)
        return hits / (len(self.lambdas) * len(self.mus))


@dataclass(frozen=True)
class BoundaryCurve:
    samples: list[tuple[float, float]]  # (mu, lambda = f(mu)) with mu increasing

    @property
    def mus(self) -> list[float]:
        return [m for m, _ in self.samples]

    @property
    def lambdas(self) -> list[float]:
        return [lam for _, lam in self.samples]


def _axis(lo, hi, n, scale) -> list[float]:
    lo, hi = float(lo), float(hi)
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}, got {scale!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 <= lo < hi):
        raise ValueError(f"need 0 <= lo < hi < inf, got ({lo}, {hi})")
    if scale == "log":
        if lo <= 0.0:
            raise ValueError("log scale needs a positive lower bound")
        pts = np.geomspace(lo, hi, n)
    else:
        pts = np.linspace(lo, hi, n)
    pts[0], pts[-1] = lo, hi
    return [float(p) for p in pts]


def sample_region(lambda_range, mu_range, n: int, scale: str = "log") -> RegionGrid:
    """``n x n`` grid of closed-form verdicts."""
    if n < 2:
        raise ValueError("n must be at least 2")
    lams = _axis(*lambda_range, n, scale)
    mus = _axis(*mu_range, n, scale)
    verdicts = [[dominates_closed_form(lam, mu) for mu in mus] for lam in lams]
    return RegionGrid(lams, mus, verdicts)


def boundary_curve(mu_lo, mu_hi, n: int) -> BoundaryCurve:
    """``n`` log-spaced samples ``(mu, f(mu))`` of the boundary above ``R_CRIT``."""
    mu_lo, mu_hi = float(mu_lo), float(mu_hi)
    if n < 2:
        raise ValueError("n must be at least 2")
    if not (R_CRIT < mu_lo < mu_hi < math.inf):
        raise ValueError(f"need {R_CRIT!r} < mu_lo < mu_hi < inf, got ({mu_lo}, {mu_hi})")
    mus = np.geomspace(mu_lo, mu_hi, n)
    mus[0], mus[-1] = mu_lo, mu_hi
    return BoundaryCurve([(float(m), f_eval(m)) for m in mus])


# -- export ------------------------------------------------------------------


def _num(x: float) -> str:
    return f"{x:.17g}"


def metadata() -> dict:
    return {"generator_version": __version__, "constants": {"r_crit": R_CRIT, "r_star": R_STAR}}


def to_csv(obj: Union[RegionGrid, BoundaryCurve]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, RegionGrid):
        w.writerow(["lambda", "mu", "dominates", "condition"])
        for lam, mu, dom, cond in obj.records():
            w.writerow([_num(lam), _num(mu), "true" if dom else "false", cond])
    else:
        w.writerow(["lambda", "mu"])
        for mu, lam in obj.samples:
            w.writerow([_num(lam), _num(mu)])
    return buf.getvalue()


def to_json(obj: Union[RegionGrid, BoundaryCurve]) -> str:
    # json writes floats with repr, which round-trips doubles exactly
    if isinstance(obj, RegionGrid):
        records = [
            {"lambda": lam, "mu": mu, "dominates": dom, "condition": cond or None}
            for lam, mu, dom, cond in obj.records()
        ]
    else:
        records = [{"lambda": lam, "mu": mu} for mu, lam in obj.samples]
    return json.dumps({"metadata": metadata(), "records": records}, indent=1)


def export(obj, fmt: str = "csv", destination: Union[str, os.PathLike, IO[str], None] = None) -> str:
    """Serialize a grid or curve; writes to ``destination`` (path or text stream) if given."""
    if fmt == "csv":
        text = to_csv(obj)
    elif fmt == "json":
        text = to_json(obj)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", newline="") as fh:
            fh.write(text)
    return text


def _verdict(dom: str, cond: str) -> Verdict:
    if dom == "true":
        return Verdict(True, Condition(cond))
    if dom == "false" and not cond:
        return Verdict(False)
    raise ValueError(f"bad verdict fields {dom!r}, {cond!r}")


def read_region_csv(text: str) -> RegionGrid:
    """Parse the output of ``to_csv`` for a region grid back into a ``RegionGrid``."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["lambda", "mu", "dominates", "condition"]:
        raise ValueError("not a region CSV")
    data = [(float(r[0]), float(r[1]), _verdict(r[2], r[3])) for r in rows[1:]]
    lams = list(dict.fromkeys(r[0] for r in data))
    mus = list(dict.fromkeys(r[1] for r in data))
    if len(data) != len(lams) * len(mus):
        raise ValueError("rows do not form a full grid")
    verdicts = [[None] * len(mus) for _ in lams]
    for k, (lam, mu, v) in enumerate(data):
        i, j = divmod(k, len(mus))
        if lam != lams[i] or mu != mus[j]:
            raise ValueError("rows are not in row-major order")
        verdicts[i][j] = v
    return RegionGrid(lams, mus, verdicts)


def read_curve_csv(text: str) -> BoundaryCurve:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["lambda", "mu"]:
        raise ValueError("not a boundary CSV")
    return BoundaryCurve([(float(mu), float(lam)) for lam, mu in rows[1:]])
