"""Strong signature Gröbner bases over the integers."""

from .engine import EngineOptions, InvariantViolation, RunResult, RunStats, RunTimeout, run, run_kk, run_pl
from .oracle import classical_strong_gb, ideal_equal, is_strong_gb, normalize_gb, strong_normal_form
from .polyring import MonomialOrder, Poly, PolyRing
from .reducer import ReduceOptions
from .sigspace import ModuleOrder, Signature

__all__ = [
    "EngineOptions", "InvariantViolation", "ModuleOrder", "MonomialOrder", "Poly", "PolyRing", "ReduceOptions",
    "RunResult", "RunStats", "RunTimeout", "Signature", "classical_strong_gb", "ideal_equal",
    "is_strong_gb", "normalize_gb", "run", "run_kk", "run_pl", "strong_normal_form",
]
