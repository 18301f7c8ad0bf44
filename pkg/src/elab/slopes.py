"""Difference quotients, one-sided slope enclosures, and the stretch estimator.

The tangent slope of a**x at its y-intercept is approached through secant
slopes (a**h - 1)/h.  For a > 1 these quotients increase with h, so the pair
at -2**-k and +2**-k brackets the true slope (the logarithm of a), and
rescaling the exponent by the measured slope turns any base into an estimate
of the base whose intercept slope is exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import powcore
from .config import CONFIG
from .powcore import Enclosure, ensure_pos_real

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class DifferenceQuotient:
    """Secant slope (a**h - 1)/h of a**x through x = 0 and x = h."""

    a: float
    h: float
    value: float

    @classmethod
    def evaluate(cls, a: float, h: float) -> "DifferenceQuotient":
        return cls(a, h, diff_quotient(a, h))


@dataclass(frozen=True)
class SlopeEnclosure:
    """Two-sided bracket of the intercept tangent slope of a**x (= ln a).

    The endpoints are the quotients at h = -2**-k and h = +2**-k, widened by
    a small certified allowance for accumulated rounding so containment of
    the true slope survives floating-point evaluation.
    """

    a: float
    k: int
    interval: Enclosure


def _offset_for(a: float, h: float) -> float:
    """a**h - 1 at full relative precision (offset space, depth max)."""
    if a == 1.0:
        return 0.0
    if a < 1.0:
        w = _offset_for(1.0 / a, h)
        return -w / (1.0 + w)
    return powcore.powm1_dyadic(a, h, CONFIG.max_depth)


def _check_offset(h: float) -> float:
    h = float(h)
    if h == 0.0 or math.isnan(h) or math.isinf(h):
        raise ValueError(f"offset h must be a nonzero finite real, got {h!r}")
    if abs(h) < CONFIG.h_guard:
        raise ValueError("offset too small for binary64 cancellation")
    return h


def diff_quotient(a: float, h: float, centered: bool = False) -> float:
    """(a**h - 1)/h, the forward secant slope of a**x at the y-intercept.

    The power is taken at the dyadic exponent nearest h at the maximum depth
    and the numerator is accumulated in offset space, so no cancellation is
    incurred even at |h| near the guard.  ``centered=True`` evaluates the
    symmetric variant (a**h - a**-h)/(2h) instead.
    """
    a = ensure_pos_real(a, "base")
    h = _check_offset(h)
    w = _offset_for(a, h)
    if not centered:
        return w / h
    # (w - w_neg)/(2h) with w_neg = -w/(1+w), folded to avoid cancellation.
    return w * (2.0 + w) / (2.0 * h * (1.0 + w))


def slope_enclosure(a: float, k: int) -> SlopeEnclosure:
    """Bracket [DQ(a, -2**-k), DQ(a, +2**-k)] around the slope ln a.

    Requires a > 1 and 5 <= k <= 40.  Both endpoints derive from the exact
    dyadic power a**(2**-k) (k successive square roots, offset space), for
    which DQ(-h) = DQ(+h)/a**h guarantees the ordering.  Endpoints carry a
    rounding allowance of 128 eps relative plus 4e-15 absolute; widths still
    shrink (non-strictly) as k grows because the relative part scales with
    the shrinking upper quotient.
    """
    a = ensure_pos_real(a, "base")
    if a <= 1.0:
        raise ValueError("enclosure requires a > 1")
    if not 5 <= k <= 40:
        raise ValueError(f"level k must satisfy 5 <= k <= 40, got {k}")
    t = powcore._root_chain(a, k)[k - 1]
    dq_pos = math.ldexp(t, k)  # 2**k * t, exact scaling
    dq_neg = dq_pos / (1.0 + t)
    slack = 128.0 * _EPS * dq_pos + 4e-15
    return SlopeEnclosure(a, k, Enclosure(dq_neg - slack, dq_pos + slack))


def estimate_from_slope(a: float, slope: float) -> float:
    """a**(1/slope): rescale the exponent so the intercept slope becomes 1."""
    a = ensure_pos_real(a, "base")
    if slope <= 0.0:
        raise ValueError(f"slope must be positive, got {slope}")
    return powcore.exp_base_midpoint(a, 1.0 / slope)


def estimate_e_by_stretch(a: float, h: float) -> float:
    """Estimate of the natural base from one measured secant slope.

    Stretching y = a**x horizontally by the measured slope m = DQ(a, h)
    produces the curve (a**(1/m))**x whose intercept slope is ~1; the new
    base a**(1/m) is the estimate, converging to the true natural base as
    h -> 0.
    """
    if a <= 1.0:
        raise ValueError(f"stretch estimation requires a > 1, got {a}")
    return estimate_from_slope(a, diff_quotient(a, h))


def tangent_slope_at(a: float, x: float, h: float) -> float:
    """Secant slope of a**x at x, evaluated through the exact factorization
    (a**(x+h) - a**x)/h = a**x * (a**h - 1)/h."""
    return powcore.exp_base_midpoint(a, x) * diff_quotient(a, h)
