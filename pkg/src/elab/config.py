"""Shared numeric configuration.

Everything downstream (slopes, series, tables, the JSON service) reads these
constants from one place so that swapping the comparison anchor or the dyadic
resolution is a one-line change.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LabConfig:
    # 16-digit comparison anchor for error columns; a reference, not a computed truth.
    e_reference: float = 2.718281828459045
    # 21 significant digits; rounds to the nearest binary64.
    pi: float = 3.14159265358979323846
    # Dyadic exponent resolution: default bracketing depth and hard maximum.
    default_depth: int = 40
    max_depth: int = 60
    # Difference quotients refuse |h| below this (binary64 cancellation guard).
    h_guard: float = 2.0 ** -40
    # Relative residual target for bisection root extraction.
    root_tol: float = 1e-15
    # Bisection bracket for inverting the series exponential (binary64 range).
    log_bracket_lo: float = -745.0
    log_bracket_hi: float = 710.0


CONFIG = LabConfig()
