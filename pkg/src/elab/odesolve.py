"""Tangent-line stepping for the growth equation y' = y.

Stepping from y(0) = 1 along tangents of slope y over n equal steps to x
multiplies by (1 + x/n) each step, so the final value IS the compound
expression (1 + x/n)**n: the method does not merely approximate the limit,
it reproduces the compound-interest sequence exactly.  The rational-path
variant makes that an exact identity of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class EulerPath:
    """Grid points (k*x/n, y_k) of the tangent-stepping recurrence."""

    x_target: float
    n: int
    points: list[tuple[float, float]]

    @property
    def final(self) -> float:
        return self.points[-1][1]


def _check_base(x: float, n: int) -> float:
    if n < 1:
        raise ValueError("n must be positive")
    base = 1.0 + x / n
    if base <= 0.0:
        raise ValueError("base nonpositive; increase n")
    return base


def euler_path(x: float, n: int) -> EulerPath:
    """Full tangent path: y_0 = 1, y_{k+1} = (1 + x/n) * y_k."""
    x = float(x)
    base = _check_base(x, n)
    step = x / n
    points = [(0.0, 1.0)]
    y = 1.0
    for k in range(1, n + 1):
        y *= base
        points.append((k * step, y))
    return EulerPath(x, n, points)


def euler_final(x: float, n: int) -> float:
    """Final path value only; O(1) memory for very large n."""
    x = float(x)
    base = _check_base(x, n)
    y = 1.0
    for _ in range(n):
        y *= base
    return y


def euler_path_exact(x: RationalLike, n: int) -> list[Fraction]:
    """Exact rational path values [y_0, ..., y_n].

    The final entry equals (1 + x/n)**n as an identity of fractions, which
    is the exactness witness for the tangent-stepping construction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    base = 1 + Fraction(x) / n
    if base <= 0:
        raise ValueError("base nonpositive; increase n")
    ys = [Fraction(1)]
    y = Fraction(1)
    for _ in range(n):
        y *= base
        ys.append(y)
    return ys


def solution_divergence(delta: float, x: float, n: int) -> float:
    """Sensitivity of the final value to the pinned initial condition.

    Integrates from y(0) = 1 and from y(0) = 1 + delta on the same grid and
    returns (difference at x)/delta, exactly 0.0 for delta = 0.  The
    recurrence is linear, so the ratio equals (1 + x/n)**n independently of
    delta: a perturbed start can never rejoin the pinned solution, which is
    the computational face of uniqueness.
    """
    if delta < 0.0:
        raise ValueError(f"delta must be non-negative, got {delta}")
    x = float(x)
    base = _check_base(x, n)
    if delta == 0.0:
        return 0.0
    y1 = 1.0
    y2 = 1.0 + delta
    for _ in range(n):
        y1 *= base
        y2 *= base
    return (y2 - y1) / delta
