"""Dominance between Sugeno-Weber t-norms: closed form, numerical falsifier and exports."""

__version__ = "0.1.0"

from .falsifier import SearchConfig, falsify, grid_min_gap, reduced_search  # noqa: E402
from .kernels import BACKEND  # noqa: E402
from .law import (  # noqa: E402
    R_CRIT,
    R_STAR,
    check_order_properties,
    dominated_set,
    dominates_closed_form,
    f_eval,
)
from .tnorms import dominance_gap, sugeno_weber, tsw_eval  # noqa: E402

__all__ = [
    "BACKEND",
    "R_CRIT",
    "R_STAR",
    "SearchConfig",
    "check_order_properties",
    "dominance_gap",
    "dominated_set",
    "dominates_closed_form",
    "f_eval",
    "falsify",
    "grid_min_gap",
    "reduced_search",
    "sugeno_weber",
    "tsw_eval",
]
