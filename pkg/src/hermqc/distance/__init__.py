"""Minimum distance engines and the quasi-cyclic lower bound."""
from .core import (
    BudgetExceeded,
    DistanceResult,
    dmin_bz,
    dmin_exhaustive,
    dmin_syndrome,
    exhaustive_cost,
    find_low_weight,
    minimum_distance,
    syndrome_cost,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DistanceResult",
    "dmin_bz",
    "dmin_exhaustive",
    "dmin_syndrome",
    "exhaustive_cost",
    "find_low_weight",
    "minimum_distance",
    "syndrome_cost",
]
from .bound import BoundReport, Interval, bound_report, cyclic_distance, thm_lower_bound  # noqa: E402

__all__ += ["BoundReport", "Interval", "bound_report", "cyclic_distance", "thm_lower_bound"]
