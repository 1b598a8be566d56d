"""Brute-force references and the sweeps that hold the fast paths to them."""

from .brute import (
    BruhatTable, FalsificationError, brute_bruhat_table, brute_coset_extremes,
    brute_demazure_family, brute_parabolic,
)
from .sweeps import DEFAULT_TYPES, SUITES, SweepConfig, SweepResult, refined_sizes, run_suite

__all__ = [
    "BruhatTable", "FalsificationError", "brute_bruhat_table", "brute_coset_extremes",
    "brute_demazure_family", "brute_parabolic", "DEFAULT_TYPES", "SUITES",
    "SweepConfig", "SweepResult", "refined_sizes", "run_suite",
]
