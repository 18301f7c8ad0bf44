"""Compound-interest limits with exact-rational oracles.

The binary64 path evaluates (1 + x/n)**n by binary exponentiation with the
base carried as a compensated hi/lo pair, so results stay within ~1 ulp of
the exact rational value instead of drifting by n * eps from rounding the
base once.  The exact path computes the same quantity in unbounded rational
arithmetic and is the oracle everything else is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import _dd
from .loginv import nat_log
from .records import ConvergenceRecord

__all__ = [
    "BigRational",
    "ConvergenceRecord",
    "BridgeRecord",
    "InterchangeResult",
    "compound",
    "compound_x",
    "compound_exact",
    "refined_compound",
    "refined_compound_exact",
    "perturbed_compound_exact",
    "exponent_bridge",
    "pitfall_table",
    "interchange_counterexample",
    "decimal_digits",
    "ulps_apart",
]

# Oracle representation: exact fraction of unbounded integers (stdlib).
BigRational = Fraction

RationalLike = Union[int, Fraction]

MAX_N = 10 ** 9


@dataclass(frozen=True)
class BridgeRecord:
    """Both sides of the exponent rearrangement n*ln(1 + x/n) = x * secant."""

    lhs: float
    rhs: float


@dataclass(frozen=True)
class InterchangeResult:
    row_limit: float
    column_limit: float


def _dd_base(x: float, n: int) -> tuple[float, float]:
    """1 + x/n as a hi/lo pair exact to ~2**-106."""
    r = x / n
    # Exact residual of the rounded division; tiny, so the float conversion
    # of the Fraction difference loses nothing that matters.
    resid = float(Fraction(x) / n - Fraction(r))
    bh, bl = _dd.two_sum(1.0, r)
    return _dd.quick_two_sum(bh, bl + resid)


def _dd_compound(x: float, n: int) -> float:
    bh, bl = _dd_base(x, n)
    if bh <= 0.0:
        raise ValueError("base nonpositive; increase n")
    rh, rl = _dd.pow_int(bh, bl, n)
    return rh + rl


def compound(n: int) -> float:
    """(1 + 1/n)**n in binary64 (compensated binary exponentiation)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_N:
        raise ValueError(f"n must not exceed {MAX_N}, got {n}")
    return _dd_compound(1.0, n)


def compound_x(x: float, n: int) -> float:
    """(1 + x/n)**n in binary64; requires a positive base."""
    if n < 1:
        raise ValueError("n must be positive")
    return _dd_compound(float(x), n)


def compound_exact(x: RationalLike, n: int) -> Fraction:
    """Exact rational (1 + x/n)**n; the oracle for the binary64 path."""
    if n < 1:
        raise ValueError("n must be positive")
    base = 1 + Fraction(x) / n
    if base <= 0:
        raise ValueError("base nonpositive; increase n")
    return base ** n


def refined_compound(n: int) -> float:
    """(1 + 1/n + 1/(2n^2))**n: the o(1/n)-corrected column.

    Replacing 1 + 1/n by any 1 + 1/n + o(1/n) preserves the limit; this
    particular correction also cancels the leading 1/(2n) error term, so the
    column sits within O(1/n^2) of the limit.
    """
    if n < 1:
        raise ValueError("n must be positive")
    nn = float(n)
    bh, bl = _dd.two_sum(1.0, 1.0 / nn)
    half_sq = 0.5 / (nn * nn)
    resid = float(Fraction(1, n) + Fraction(1, 2 * n * n) - Fraction(1.0 / nn) - Fraction(half_sq))
    bh, bl = _dd.add(bh, bl, half_sq, resid)
    rh, rl = _dd.pow_int(bh, bl, n)
    return rh + rl


def refined_compound_exact(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return (1 + Fraction(1, n) + Fraction(1, 2 * n * n)) ** n


def perturbed_compound_exact(n: int) -> Fraction:
    """(1 + 1/n + 1/n^2)**n: a plain o(1/n) perturbation, limit still e."""
    if n < 1:
        raise ValueError("n must be positive")
    return (1 + Fraction(1, n) + Fraction(1, n * n)) ** n


def exponent_bridge(x: float, n: int) -> BridgeRecord:
    """Rearrange n*ln(1 + x/n) as x times the secant slope of ln at 1.

    lhs = n * ln(1 + x/n); rhs = x * (ln(1 + x/n) - ln 1)/h with the secant
    step h = x/n taken directly (mathematically identical to (1 + x/n) - 1,
    without re-deriving it by subtraction).  Both sides tend to x as n grows
    because the secant slope tends to the intercept tangent slope of ln.
    """
    if n < 1:
        raise ValueError("n must be positive")
    x = float(x)
    if x == 0.0:
        return BridgeRecord(0.0, 0.0)
    u = x / n
    arg = 1.0 + u
    if arg <= 0.0:
        raise ValueError("base nonpositive; increase n")
    if u == 0.0 or arg == 1.0:
        # Secant step below binary64 resolution: both sides degenerate to 0.
        return BridgeRecord(0.0, 0.0)
    ln_val = nat_log(arg).value
    lhs = n * ln_val
    rhs = x * (ln_val / u)
    return BridgeRecord(lhs, rhs)


def pitfall_table(c_values: Sequence[float], n_values: Sequence[int]) -> list[list[float]]:
    """Matrix of (1 + c/n)**n entries, rows indexed by c, columns by n.

    Row c converges to the c-th power of the natural base; the c = 1 row can
    NOT be replaced by 1**n even though 1 + 1/n tends to 1, which is the
    whole point of emitting the table.
    """
    return [[compound_x(c, n) for n in n_values] for c in c_values]


def interchange_counterexample(n_max: int) -> InterchangeResult:
    """Row/column limit disagreement for a(n, k) = 1 if k == n else 0.

    Every row sums to 1, so the limit of row sums is 1; every fixed column
    is eventually 0, so the sum of column limits is 0.  Swapping a limit
    with an infinite sum is not a free move.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")

    def a(n: int, k: int) -> float:
        return 1.0 if k == n else 0.0

    row_sums = [math.fsum(a(n, k) for k in range(n + 1)) for n in range(1, n_max + 1)]
    row_limit = row_sums[-1]
    # For each fixed k the entries vanish once n > k, so every column limit
    # is witnessed by evaluating at any n beyond the k range.
    column_limit = math.fsum(a(n_max + 1, k) for k in range(n_max + 1))
    return InterchangeResult(row_limit, column_limit)


def decimal_digits(fr: Fraction, digits: int) -> str:
    """Truncated decimal expansion of a rational, to ``digits`` places."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    ip, rem = divmod(fr.numerator, fr.denominator)
    if digits == 0:
        return f"{sign}{ip}"
    rem *= 10 ** digits
    frac_digits = str(rem // fr.denominator).rjust(digits, "0")
    return f"{sign}{ip}.{frac_digits}"


def ulps_apart(a: float, b: float) -> float:
    """Distance |a - b| measured in units of the last place of b."""
    if a == b:
        return 0.0
    return abs(a - b) / math.ulp(abs(b))
