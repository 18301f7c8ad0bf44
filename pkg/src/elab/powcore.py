"""Powers, roots, and the general exponential a**x built from first principles.

No libm transcendentals are used anywhere in this module: integer powers come
from repeated multiplication, roots from bisection on the monotone map
r -> r**n, and a**x from bracketing x between dyadic exponents p/2**depth and
(p+1)/2**depth, evaluated through chains of successive square roots.  The
result is a certified enclosure [a**(p/2^d), a**((p+1)/2^d)] rather than a
point estimate.

Two internal evaluation styles coexist:

* value space -- plain products, used for enclosure endpoints (a**x can be
  large or tiny; relative error stays at a few ulps per factor);
* offset space -- quantities carried as w = value - 1, used by the slope
  machinery in :mod:`elab.slopes` where a**h is within rounding distance of 1
  and forming ``value - 1`` explicitly would cancel catastrophically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .config import CONFIG

_INF = float("inf")

# Strictly positive finite real; enforced by ensure_pos_real at every boundary.
PosReal = float


def ensure_pos_real(value: float, name: str = "value") -> float:
    """Validate the strictly-positive-finite domain used throughout."""
    v = float(value)
    if not (v > 0.0) or math.isinf(v):
        raise ValueError(f"{name} must be a positive finite real, got {value!r}")
    return v


@dataclass(frozen=True)
class Enclosure:
    """Certified interval [lo, hi] guaranteed to contain a target quantity."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi) or math.isinf(self.lo) or math.isinf(self.hi):
            raise ValueError(f"enclosure endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"enclosure endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class DyadicExponent:
    """Rational exponent numerator / 2**depth in canonical form.

    Canonical means the numerator is odd or the depth is zero, so each value
    has exactly one representation.
    """

    numerator: int
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be non-negative")
        if self.depth > CONFIG.max_depth:
            raise ValueError("depth exceeded")
        num, dep = self.numerator, self.depth
        while dep > 0 and num % 2 == 0:
            num //= 2
            dep -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "depth", dep)

    @classmethod
    def floor_of(cls, x: float, depth: int) -> "DyadicExponent":
        """Largest dyadic p/2**depth <= x."""
        return cls(_dyadic_floor(x, depth), depth)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.depth)

    def as_float(self) -> float:
        return math.ldexp(float(self.numerator), -self.depth)


def int_pow(x: float, n: int) -> float:
    """x**n for positive integer n by binary exponentiation."""
    if n < 1:
        raise ValueError(f"exponent must be a positive integer, got {n}")
    x = ensure_pos_real(x, "x")
    r = 1.0
    b = x
    m = n
    while m:
        if m & 1:
            r *= b
        m >>= 1
        if m:
            b *= b
            if math.isinf(b) and m:
                raise ValueError(f"magnitude overflow computing {x}**{n}")
    if math.isinf(r):
        raise ValueError(f"magnitude overflow computing {x}**{n}")
    return r


def _pow_or_inf(x: float, n: int) -> float:
    """x**n, returning inf on overflow instead of raising (bisection helper)."""
    r = 1.0
    b = x
    while n:
        if n & 1:
            r *= b
        n >>= 1
        if n:
            b *= b
            if math.isinf(b):
                return _INF if n or r > 1.0 else r
    return r


def nth_root(y: float, n: int, tol: float) -> float:
    """r with |r**n - y| <= tol * max(1, y), by bisection on r -> r**n.

    The bracket starts at [min(1, y), max(1, y)] and halves until its
    endpoints are adjacent floats (full binary64 precision; the residual
    condition is then verified, not used as an early exit, so callers like
    the round-trip property get the tightest representable root rather than
    merely a residual-feasible one).  Iterations are capped at 200, which
    covers every magnitude the package produces; the cap being hit with the
    residual unmet raises.
    """
    if tol <= 0.0 or math.isnan(tol):
        raise ValueError("invalid tolerance")
    y = ensure_pos_real(y, "y")
    if n < 1:
        raise ValueError(f"root order must be a positive integer, got {n}")
    if y == 1.0 or n == 1:
        return y
    lo, hi = (y, 1.0) if y < 1.0 else (1.0, y)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _pow_or_inf(mid, n) < y:
            lo = mid
        else:
            hi = mid
    best = lo if abs(_pow_or_inf(lo, n) - y) <= abs(_pow_or_inf(hi, n) - y) else hi
    if abs(_pow_or_inf(best, n) - y) > tol * max(1.0, y):
        raise ValueError(
            f"root bisection did not converge for y={y}, n={n} within 200 iterations"
        )
    return best


# Chains of t_j = a**(1/2**j) - 1 are reused across every power evaluation at
# the same base, so memoize them (pure data; benign under concurrent recompute).
_CHAIN_CACHE: dict[float, list[float]] = {}
_CHAIN_CACHE_LIMIT = 4096


def _root_chain(a: float, depth: int) -> list[float]:
    """[t_1, ..., t_depth] with t_j = a**(2**-j) - 1, for a > 1.

    Computed by the cancellation-free recurrence
    t_{j+1} = t_j / (1 + sqrt(1 + t_j)), which is algebraically
    sqrt(1 + t_j) - 1 without ever subtracting nearby quantities.
    """
    chain = _CHAIN_CACHE.get(a)
    if chain is None or len(chain) < depth:
        chain = list(chain or ())
        t = (a - 1.0) if not chain else chain[-1]
        for _ in range(depth - len(chain)):
            s = nth_root(1.0 + t, 2, CONFIG.root_tol)
            t = t / (1.0 + s)
            chain.append(t)
        if len(_CHAIN_CACHE) >= _CHAIN_CACHE_LIMIT:
            _CHAIN_CACHE.clear()
        _CHAIN_CACHE[a] = chain
    return chain


def _dyadic_floor(x: float, depth: int) -> int:
    """Exact floor(x * 2**depth): the scaling is a power of two, hence lossless."""
    scaled = x * float(1 << depth)
    if math.isinf(scaled):
        raise ValueError(f"exponent {x} out of dyadic range at depth {depth}")
    return math.floor(scaled)


def _dyadic_nearest(x: float, depth: int) -> int:
    scaled = x * float(1 << depth)
    if math.isinf(scaled):
        raise ValueError(f"exponent {x} out of dyadic range at depth {depth}")
    return round(scaled)


def _value_from_dyadic(a: float, p: int, depth: int, chain: list[float]) -> float:
    """a**(p / 2**depth) in value space, for a > 1."""
    q, r = divmod(p, 1 << depth)
    v = 1.0
    for j in range(1, depth + 1):
        if (r >> (depth - j)) & 1:
            v *= 1.0 + chain[j - 1]
    if q > 0:
        v *= int_pow(a, q)
    elif q < 0:
        v /= int_pow(a, -q)
    return v


def pow1p_int(w: float, n: int) -> float:
    """(1 + w)**n - 1 by binary exponentiation carried in offset space."""
    if n < 0:
        v = pow1p_int(w, -n)
        return -v / (1.0 + v)
    r = 0.0
    b = w
    while n:
        if n & 1:
            r = r + b + r * b
        n >>= 1
        if n:
            b = 2.0 * b + b * b
    return r


def powm1_dyadic(a: float, x: float, depth: int) -> float:
    """a**x' - 1 in offset space, x' = nearest dyadic round(x * 2**d) / 2**d.

    Requires a > 1.  The offset-space accumulation keeps full relative
    precision when a**x is within rounding distance of 1, which is exactly
    the regime of difference quotients at small |h|.  Negative exponents go
    through the reciprocal identity on |x|: flooring them directly would
    represent a tiny offset as (a**-1) * (almost a), whose near-cancelling
    product costs ~8 significant digits.
    """
    p = _dyadic_nearest(x, depth)
    return _powm1_from_numerator(a, p, depth)


def _powm1_from_numerator(a: float, p: int, depth: int) -> float:
    if p < 0:
        w = _powm1_from_numerator(a, -p, depth)
        return -w / (1.0 + w)
    q, r = divmod(p, 1 << depth)
    chain = _root_chain(a, depth)
    w = 0.0
    for j in range(1, depth + 1):
        if (r >> (depth - j)) & 1:
            t = chain[j - 1]
            w = w + t + w * t
    if q:
        wq = pow1p_int(a - 1.0, q)
        w = wq + w + wq * w
    return w


def exp_base(a: float, x: float, depth: int | None = None) -> Enclosure:
    """Enclosure of a**x from dyadic exponent brackets.

    For a > 1 the bracket is [a**(p/2^d), a**((p+1)/2^d)] with
    p = floor(x * 2^d); the upper endpoint is the lower one times
    (1 + t_depth), which guarantees lo <= hi in floating point.  a == 1
    returns the point enclosure [1, 1]; 0 < a < 1 is evaluated through the
    reciprocal base 1/a (endpoints widened by a few ulps to cover the
    rounding of the reciprocal).
    """
    a = ensure_pos_real(a, "base")
    if depth is None:
        depth = CONFIG.default_depth
    if depth < 0 or depth > CONFIG.max_depth:
        raise ValueError("depth exceeded")
    if a == 1.0:
        return Enclosure(1.0, 1.0)
    if a < 1.0:
        inner = exp_base(1.0 / a, x, depth)
        pad = 4.0 * 2.220446049250313e-16
        return Enclosure((1.0 / inner.hi) * (1.0 - pad), (1.0 / inner.lo) * (1.0 + pad))
    if depth == 0:
        p = _dyadic_floor(x, 0)
        lo = int_pow(a, p) if p > 0 else (1.0 if p == 0 else 1.0 / int_pow(a, -p))
        return Enclosure(lo, lo * a)
    p = _dyadic_floor(x, depth)
    chain = _root_chain(a, depth)
    lo = _value_from_dyadic(a, p, depth, chain)
    hi = lo * (1.0 + chain[depth - 1])
    # Certified allowance for the accumulated rounding of up to ~depth factor
    # multiplies: without it the bracket is narrower than its own evaluation
    # noise once ln(a) * 2**-depth drops below ~1e-14.
    pad = (depth + 32) * 1.7e-16
    return Enclosure(lo * (1.0 - pad), hi * (1.0 + pad))


def exp_base_midpoint(a: float, x: float, depth: int | None = None) -> float:
    return exp_base(a, x, depth).midpoint


def power_point(a: float, x: float, depth: int | None = None) -> float:
    """Best point estimate of a**x (no enclosure padding).

    When x falls exactly on the dyadic grid the bracket's lower corner IS the
    value (a**0 = 1 exactly, a**0.5 = the computed square root, ...); off the
    grid this is the unpadded bracket midpoint.  Used for curve sampling,
    where exactness at grid points matters more than certified width.
    """
    a = ensure_pos_real(a, "base")
    if depth is None:
        depth = CONFIG.default_depth
    if depth <= 0 or depth > CONFIG.max_depth:
        raise ValueError("depth exceeded")
    if a == 1.0:
        return 1.0
    if a < 1.0:
        return 1.0 / power_point(1.0 / a, x, depth)
    scaled = x * float(1 << depth)
    p = math.floor(scaled)
    chain = _root_chain(a, depth)
    lo = _value_from_dyadic(a, p, depth, chain)
    if float(p) == scaled:
        return lo
    return 0.5 * (lo + lo * (1.0 + chain[depth - 1]))


def chord_gap(a: float, b: float, c: float, x: float) -> float:
    """Height of the chord of y = a**x over the curve at interior x.

    The chord joins (b, a**b) and (c, a**c); the returned gap is strictly
    positive for a > 1 because the exponential lies strictly below its
    chords (convexity).
    """
    a = ensure_pos_real(a, "base")
    if a <= 1.0:
        raise ValueError(f"chord gap requires base > 1, got {a}")
    if not (b < x < c):
        raise ValueError("x not interior")
    fb = exp_base_midpoint(a, b)
    fc = exp_base_midpoint(a, c)
    fx = exp_base_midpoint(a, x)
    chord = fb + (fc - fb) * ((x - b) / (c - b))
    return chord - fx
