"""Natural logarithm as the inverse of the series exponential.

The log never appears as a primitive here: nat_log bisects the strictly
increasing map v -> exp(v) (the series from :mod:`elab.series`) until the
bracket endpoints are adjacent floats.  Downstream checks confirm the story
from three more directions: tangent slopes of exp and log at mirror points
multiply to 1, the area under 1/t reproduces the log, and the same slope is
bracketed by the dyadic enclosures of :mod:`elab.slopes`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import CONFIG
from .series import taylor_exp

NAPIER_SCALE = 10_000_000  # Napier's whole sine L


@dataclass(frozen=True)
class LogValue:
    """A log evaluation together with its forward-map residual."""

    argument: float
    value: float
    residual: float  # |exp(value) - argument| / argument

    def __post_init__(self) -> None:
        if self.residual > 1e-12:
            raise ValueError(
                f"log inversion residual {self.residual} exceeds 1e-12 at {self.argument}"
            )


@dataclass(frozen=True)
class ReflectionSlopes:
    """Tangent slopes of exp at (ln a, a) and of log at (a, ln a)."""

    exp_slope: float
    log_slope: float
    product: float


@dataclass(frozen=True)
class NapierEntry:
    scaled_sine: int
    napier_log: float


def _exp(v: float) -> float:
    return taylor_exp(v, 1e-16).partial_sum


def _forward(v: float) -> float:
    """Series exponential extended over the whole bisection bracket.

    Beyond |v| = 700 the series itself would overflow mid-sum, so the value
    is squared up from half the exponent; this saturates to inf/subnormals
    exactly where binary64 does.
    """
    if abs(v) > 700.0:
        u = _exp(0.5 * v)
        return u * u
    return _exp(v)


def nat_log(y: float, tol: float = 1e-12) -> LogValue:
    """Invert the series exponential by bisection over [-745, 710].

    Runs until the bracket endpoints are adjacent floats (75-80 halvings),
    then records the relative forward residual, which must meet ``tol``.
    Arguments below 1e-300 are rejected: their images live among subnormals
    where no inverse can meet the residual contract.
    """
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    if not (isinstance(y, (int, float)) and y > 0.0 and math.isfinite(y)):
        raise ValueError("argument out of range")
    y = float(y)
    if y < 1e-300:
        raise ValueError("argument out of range")
    if y == 1.0:
        # The root is exactly 0; bisection would otherwise descend through
        # the dense subnormal neighborhood of 0 for a thousand iterations.
        return LogValue(1.0, 0.0, 0.0)
    lo, hi = CONFIG.log_bracket_lo, CONFIG.log_bracket_hi
    if not (_forward(lo) <= y <= _forward(hi)):
        raise ValueError("argument out of range")
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _forward(mid) < y:
            lo = mid
        else:
            hi = mid
    value = hi if abs(_forward(hi) - y) < abs(_forward(lo) - y) else lo
    residual = abs(_forward(value) - y) / y
    if residual > tol:
        raise ValueError(f"log inversion residual {residual} exceeds tolerance {tol}")
    return LogValue(y, value, residual)


def ln(y: float) -> float:
    """Shorthand for nat_log(y).value."""
    return nat_log(y).value


def reflection_slope_check(a: float, h: float = 1e-6) -> ReflectionSlopes:
    """Tangent slopes at mirror points of exp and log are reciprocals.

    The point (ln a, a) on the exponential reflects to (a, ln a) on the log;
    rise and run trade places, so the slopes (a and 1/a) multiply to 1.
    Both slopes are measured with centered difference quotients: the O(h)
    bias of one-sided quotients leaves the product 1 + (h/2)(1 - 1/a), which
    for small a is far larger than the h^2-level agreement wanted here.
    """
    if a <= 0.0 or not math.isfinite(a):
        raise ValueError("argument out of range")
    if h <= 0.0 or h < CONFIG.h_guard:
        raise ValueError("offset too small for binary64 cancellation")
    v = ln(a)
    exp_slope = (_exp(v + h) - _exp(v - h)) / (2.0 * h)
    log_slope = (ln(a + h) - ln(a - h)) / (2.0 * h)
    return ReflectionSlopes(exp_slope, log_slope, exp_slope * log_slope)


def quadrature_log(x: float, panels: int) -> float:
    """Composite midpoint rule for the area under 1/t from 1 to x.

    Integrates over [min(1, x), max(1, x)] and flips the sign for x < 1.
    Error falls as 1/panels^2; panel contributions are summed exactly.
    """
    if panels < 1:
        raise ValueError("panels must be a positive integer")
    if x <= 0.0 or not math.isfinite(x):
        raise ValueError("argument out of range")
    x = float(x)
    if x == 1.0:
        return 0.0
    lo, hi = (x, 1.0) if x < 1.0 else (1.0, x)
    width = (hi - lo) / panels
    total = math.fsum(1.0 / (lo + (i + 0.5) * width) for i in range(panels))
    area = total * width
    return -area if x < 1.0 else area


def napier_log(scaled_sine: int) -> NapierEntry:
    """Napier's logarithm of a scaled sine: -L * ln(y / L), L = 10,000,000.

    Positions follow the two-particle construction: one particle slows in
    proportion to its remaining distance while the other keeps the initial
    speed, so the uniform particle's position when the decaying one reaches
    y is -L ln(y/L).
    """
    if scaled_sine == 0:
        raise ValueError("logarithm of zero sine")
    if not 1 <= scaled_sine <= NAPIER_SCALE:
        raise ValueError(f"scaled sine must lie in 1..{NAPIER_SCALE}, got {scaled_sine}")
    ratio = scaled_sine / NAPIER_SCALE
    value = -NAPIER_SCALE * ln(ratio)
    return NapierEntry(scaled_sine, abs(value) if value == 0.0 else value)


def briggs_log10(x: float) -> float:
    """Base-10 logarithm via the natural one: ln(x) / ln(10)."""
    return ln(x) / ln(10.0)
