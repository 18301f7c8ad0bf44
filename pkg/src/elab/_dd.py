"""Compensated (double-double) arithmetic helpers.

A value is carried as an unevaluated sum ``hi + lo`` of two binary64 floats
with ``|lo| <= ulp(hi)/2``, giving roughly 106 bits of effective precision.
This is what lets the binary64 computation paths stay within a couple of ulps
of the exact-rational oracles instead of drifting by Theta(n * eps) during
binary exponentiation, and keeps alternating Taylor sums honest when the
intermediate terms are orders of magnitude larger than the result.

Only the handful of operations the package needs are implemented.  All inputs
are assumed finite; splitting overflows only beyond ~1e300, far outside the
magnitudes used here.
"""

from __future__ import annotations

_SPLIT = 134217729.0  # 2**27 + 1, Veltkamp splitting constant


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Exact sum: returns (s, e) with s = fl(a+b) and a + b = s + e."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """Exact sum assuming |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    """Exact product: returns (p, e) with p = fl(a*b) and a * b = p + e."""
    p = a * b
    ah = _SPLIT * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLIT * b
    bh = bh - (bh - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    s, e = two_sum(xh, yh)
    e += xl + yl
    return quick_two_sum(s, e)


def mul(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    p, e = two_prod(xh, yh)
    e += xh * yl + xl * yh
    return quick_two_sum(p, e)


def mul_float(xh: float, xl: float, f: float) -> tuple[float, float]:
    p, e = two_prod(xh, f)
    e += xl * f
    return quick_two_sum(p, e)


def div_float(xh: float, xl: float, d: float) -> tuple[float, float]:
    q1 = xh / d
    ph, pl = two_prod(q1, d)
    q2 = ((xh - ph) + (xl - pl)) / d
    return quick_two_sum(q1, q2)


def pow_int(xh: float, xl: float, n: int) -> tuple[float, float]:
    """(xh + xl) ** n for n >= 0 by binary exponentiation."""
    rh, rl = 1.0, 0.0
    bh, bl = xh, xl
    while n:
        if n & 1:
            rh, rl = mul(rh, rl, bh, bl)
        n >>= 1
        if n:
            bh, bl = mul(bh, bl, bh, bl)
    return rh, rl
