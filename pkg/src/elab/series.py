"""Factorial and Taylor series with certified truncation bounds.

Terms are always built by iterated multiply/divide (never by evaluating a
factorial), so nothing overflows before the terms underflow.  The binomial
bridge terms a(n, k) tie the compound-interest partial sums to the factorial
series: each a(n, k) is dominated by 1/k! and converges to it, and the
distance between the series limit and (1 + 1/n)**n is bounded by a fully
computable certificate.

Sine, cosine, and the complex exponential sum alternating series whose
intermediate terms can dwarf the result (|x|**k/k! peaks near k = |x|), so
their term recurrences and accumulators run in compensated hi/lo arithmetic;
see :mod:`elab._dd`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _dd
from .config import CONFIG
from .records import ConvergenceRecord

_EPS = 2.220446049250313e-16

MAX_FACTORIAL_TERMS = 170  # 1/k! underflows to subnormal noise soon after
MAX_EXP_ARG = 700.0
MAX_TRIG_ARG = 30.0


@dataclass(frozen=True)
class SeriesState:
    """Where a truncated series evaluation stopped and what it guarantees."""

    partial_sum: float
    terms_used: int
    last_term: float
    tail_bound: float


@dataclass(frozen=True)
class BinomialTermGrid:
    """One full row of binomial bridge terms a(n, k), k = 0..n.

    Construction enforces the row's two structural facts: every term is
    positive and dominated by 1/k!, and in exact arithmetic the terms sum
    to (1 + 1/n)**n.
    """

    n: int
    terms: list[float]

    @classmethod
    def build(cls, n: int) -> "BinomialTermGrid":
        if n < 1:
            raise ValueError("n must be positive")
        if n > 10 ** 4:
            raise ValueError(f"grid rows cap at n = 10^4, got {n}")
        terms = []
        t = 1.0
        inv_fact = 1.0
        for k in range(n + 1):
            if k > 0:
                inv_fact /= k
                t *= ((n - (k - 1)) / n) / k
            if not 0.0 < t <= inv_fact * (1.0 + 4.0 * _EPS):
                raise ValueError(f"domination violated at k={k}")
            terms.append(t)
        return cls(n, terms)

    def row_sum_exact(self) -> Fraction:
        """Exact counterpart of sum(terms); equals (1 + 1/n)**n identically."""
        return binomial_row_sum_exact(self.n)


class ComplexValue(NamedTuple):
    re: float
    im: float

    def modulus(self) -> float:
        return math.hypot(self.re, self.im)


def factorial_partial_sum(m: int) -> float:
    """S_m = sum of 1/k! for k = 0..m (exactly summed, then rounded once)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m > MAX_FACTORIAL_TERMS:
        raise ValueError(f"m must not exceed {MAX_FACTORIAL_TERMS}, got {m}")
    terms = []
    t = 1.0
    for k in range(m + 1):
        if k > 0:
            t /= k
        terms.append(t)
    return math.fsum(terms)


def factorial_partial_sum_exact(m: int) -> Fraction:
    """Exact rational S_m; oracle for the float path."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    s = Fraction(0)
    f = 1
    for k in range(m + 1):
        if k > 0:
            f *= k
        s += Fraction(1, f)
    return s


def tail_bound(m: int) -> float:
    """Certified upper bound on the factorial tail sum beyond index m.

    Every term past 1/(m+1)! shrinks by at least 1/(m+2), so the tail is
    dominated by the geometric sum (1/(m+1)!) * (m+2)/(m+1).
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    inv_fact = 1.0
    for k in range(1, m + 2):
        inv_fact /= k
    return inv_fact * ((m + 2) / (m + 1)) * (1.0 + 8.0 * _EPS)


def tail_bound_exact(m: int) -> Fraction:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return Fraction(1, math.factorial(m + 1)) * Fraction(m + 2, m + 1)


def binomial_term(n: int, k: int) -> float:
    """a(n, k): the k-th term of the binomial expansion of (1 + 1/n)**n.

    Computed as a running product of ((n - j)/n) / (j + 1) factors; each
    factor keeps the partial product in range, so no overflow for any k <= n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0 or k > n:
        raise ValueError("k out of range")
    v = 1.0
    for j in range(k):
        v *= ((n - j) / n) / (j + 1)
    return v


def binomial_term_exact(n: int, k: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0 or k > n:
        raise ValueError("k out of range")
    return Fraction(math.comb(n, k), n ** k)


def binomial_row_sum_exact(n: int) -> Fraction:
    """Exact sum of all a(n, k); equals (1 + 1/n)**n by the binomial theorem."""
    return sum(binomial_term_exact(n, k) for k in range(n + 1))


def series_error_certificate(n: int, m: int) -> float:
    """Computable bound on |series limit - (1 + 1/n)**n|.

    For any m <= n the distance is at most the sum of the first m + 1 term
    gaps |1/k! - a(n, k)| plus the factorial tail bound beyond m: the gaps
    for k in (m, n] are dominated by 1/k! and fold into the tail.
    """
    if n < 1 or n > 10 ** 4:
        raise ValueError(f"n must be in [1, 10^4], got {n}")
    if m < 1 or m > n:
        raise ValueError(f"m must satisfy 1 <= m <= n, got {m}")
    gaps = []
    inv_fact = 1.0
    term = 1.0
    for k in range(m + 1):
        if k > 0:
            inv_fact /= k
            term *= ((n - (k - 1)) / n) / k
        gaps.append(abs(inv_fact - term))
    # Each computed gap subtracts two nearby rounded quantities, so it can
    # undershoot the true gap by a few ulps of 1/k!; the absolute allowance
    # keeps the certificate a genuine upper bound even when the geometric
    # slack of the tail term is below rounding noise (large m, large n).
    rounding = (m + 2) * 4.0 * _EPS
    return math.fsum(gaps) * (1.0 + 8.0 * _EPS) + tail_bound(m) + rounding


def taylor_exp(x: float, tol: float) -> SeriesState:
    """Power series for the natural exponential, truncated at relative tol.

    Sums 1 + x + x^2/2! + ... until the incoming term is below
    tol * max(1, |sum|) once the index has passed |x| (after which terms
    shrink monotonically).  Negative arguments are evaluated through the
    reciprocal of the positive-argument sum: the alternating series loses
    all significance to cancellation long before x = -20, the reciprocal
    path loses none.  The tail bound is the geometric domination from the
    term ratio x/(k + 1).
    """
    if tol <= 0.0 or math.isnan(tol):
        raise ValueError("tolerance must be positive")
    x = float(x)
    if math.isnan(x) or abs(x) > MAX_EXP_ARG:
        raise ValueError(f"|x| must not exceed {MAX_EXP_ARG}, got {x!r}")
    if x < 0.0:
        pos = taylor_exp(-x, tol)
        value = 1.0 / pos.partial_sum
        # |1/S - true| = |S - S_true| / (S * S_true) <= bound / (S*(S - bound))
        denom = pos.partial_sum * (pos.partial_sum - pos.tail_bound)
        bound = pos.tail_bound / denom if denom > 0.0 else pos.tail_bound
        return SeriesState(value, pos.terms_used, pos.last_term, bound)
    s = 1.0
    t = 1.0
    k = 0
    while True:
        k += 1
        t = t * x / k
        s += t
        if k >= x and t < tol * max(1.0, s):
            break
        if k > 3000:  # unreachable for |x| <= 700; defensive stop
            break
    ratio = x / (k + 2)
    tail = (t * x / (k + 1)) / (1.0 - ratio)
    return SeriesState(s, k, t, tail)


def _alternating_dd(x: float, tol: float, start: float, k0: int) -> float:
    """Shared alternating even/odd series core in hi/lo arithmetic.

    start = x, k0 = 1 sums x - x^3/3! + x^5/5! - ... (sine);
    start = 1, k0 = 0 sums 1 - x^2/2! + x^4/4! - ... (cosine).
    """
    x2h, x2l = _dd.two_prod(x, x)
    th, tl = start, 0.0
    sh, sl = start, 0.0
    k = k0
    while True:
        th, tl = _dd.mul(th, tl, x2h, x2l)
        th, tl = _dd.mul_float(th, tl, -1.0)
        th, tl = _dd.div_float(th, tl, float((k + 1) * (k + 2)))
        k += 2
        sh, sl = _dd.add(sh, sl, th, tl)
        if abs(th) < tol * max(1.0, abs(sh)) and k > abs(x):
            return sh + sl


def _check_trig(x: float, tol: float) -> float:
    if tol <= 0.0 or math.isnan(tol):
        raise ValueError("tolerance must be positive")
    x = float(x)
    if math.isnan(x) or abs(x) > MAX_TRIG_ARG:
        raise ValueError(f"|x| must not exceed {MAX_TRIG_ARG}, got {x!r}")
    return x


def taylor_sin(x: float, tol: float = 1e-15) -> float:
    x = _check_trig(x, tol)
    if x == 0.0:
        return 0.0
    return _alternating_dd(x, tol, x, 1)


def taylor_cos(x: float, tol: float = 1e-15) -> float:
    x = _check_trig(x, tol)
    return _alternating_dd(x, tol, 1.0, 0)


def complex_exp(theta: float, tol: float = 1e-15) -> ComplexValue:
    """The complex-exponential series at a purely imaginary argument.

    One running term theta^k/k! is threaded through the four-step sign/axis
    cycle of the imaginary unit's powers, accumulating the even-index terms
    into the real part and odd-index terms into the imaginary part.  The
    rearrangement into two real series is legitimate because the series
    converges absolutely.  Independent of taylor_sin/taylor_cos, which it
    must reproduce within 2 * tol.
    """
    theta = _check_trig(theta, tol)
    re_h, re_l = 1.0, 0.0
    im_h, im_l = 0.0, 0.0
    th, tl = 1.0, 0.0  # |term| = theta^k / k!
    k = 0
    while True:
        k += 1
        th, tl = _dd.mul_float(th, tl, theta)
        th, tl = _dd.div_float(th, tl, float(k))
        axis = k & 3  # i^k cycle: 1, i, -1, -i
        if axis == 0:
            re_h, re_l = _dd.add(re_h, re_l, th, tl)
        elif axis == 1:
            im_h, im_l = _dd.add(im_h, im_l, th, tl)
        elif axis == 2:
            re_h, re_l = _dd.add(re_h, re_l, -th, -tl)
        else:
            im_h, im_l = _dd.add(im_h, im_l, -th, -tl)
        if k > abs(theta) and abs(th) < 0.5 * tol * max(1.0, abs(re_h), abs(im_h)):
            return ComplexValue(re_h + re_l, im_h + im_l)


def sinc_limit_table(k_range: range | list[int]) -> list[ConvergenceRecord]:
    """Rows (h = 2**-k, sin(h)/h); values rise toward the limit 1."""
    rows = []
    for k in k_range:
        if not 1 <= k <= 30:
            raise ValueError(f"levels must lie in 1..30, got {k}")
        h = math.ldexp(1.0, -k)
        v = taylor_sin(h, 1e-16) / h
        rows.append(ConvergenceRecord(n=h, value=v, error=v - 1.0))
    return rows
