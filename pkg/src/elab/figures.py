"""Point-sequence data behind the explorer figures.

Only data is produced here (labeled, x-sorted point lists); rendering belongs
to whatever client consumes the JSON.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import powcore, slopes
from .loginv import NAPIER_SCALE, ln, napier_log
from .odesolve import euler_path
from .series import taylor_exp

FIGURE_IDS = ("exp-stretch", "reflect", "inverse-derivative", "napier")

MIN_SAMPLES = 16
MAX_SAMPLES = 4096


@dataclass(frozen=True)
class Curve:
    label: str
    points: list[tuple[float, float]]


@dataclass(frozen=True)
class FigureData:
    figure_id: str
    curves: list[Curve] = field(default_factory=list)


def _grid(lo: float, hi: float, samples: int) -> list[float]:
    # Odd count keeps 0 on symmetric grids, where shared-intercept checks look.
    if samples % 2 == 0:
        samples += 1
    step = (hi - lo) / (samples - 1)
    return [lo + i * step for i in range(samples)]


def _check_samples(samples: int) -> int:
    if not MIN_SAMPLES <= samples <= MAX_SAMPLES:
        raise ValueError(f"sampling density must lie in {MIN_SAMPLES}..{MAX_SAMPLES}")
    return samples


def _exp_curve(a: float, stretch: float, xs: list[float]) -> list[tuple[float, float]]:
    return [(x, powcore.power_point(a, x / stretch)) for x in xs]


def exp_stretch_figure(samples: int = 129) -> FigureData:
    """y = 8**x next to its 6x horizontal stretch 8**(x/6), tangents included.

    The stretch of one exponential is another exponential (8**(1/6) ** x is
    the square-root-of-2 curve); both curves share the intercept (0, 1) and
    their intercept tangent slopes differ by exactly the stretch factor.
    """
    _check_samples(samples)
    slope8 = slopes.diff_quotient(8.0, 1e-8)
    curves = [
        Curve("y=8^x", _exp_curve(8.0, 1.0, _grid(-1.1, 1.1, samples))),
        Curve("y=8^(x/6)", _exp_curve(8.0, 6.0, _grid(-3.0, 3.0, samples))),
        Curve("tangent(8^x)", [(x, 1.0 + slope8 * x) for x in _grid(-0.6, 0.6, 17)]),
        Curve("tangent(8^(x/6))", [(x, 1.0 + (slope8 / 6.0) * x) for x in _grid(-2.4, 2.4, 17)]),
    ]
    return FigureData("exp-stretch", curves)


def reflect_figure(samples: int = 129) -> FigureData:
    """exp, log, the mirror line y = x, and the two slope-1 tangents."""
    _check_samples(samples)
    e_xs = _grid(-2.5, 1.6, samples)
    l_xs = [x for x in _grid(0.1, 5.0, samples)]
    curves = [
        Curve("y=exp(x)", [(x, taylor_exp(x, 1e-15).partial_sum) for x in e_xs]),
        Curve("y=ln(x)", [(x, ln(x)) for x in l_xs]),
        Curve("y=x", [(x, x) for x in _grid(-2.5, 5.0, 17)]),
        Curve("tangent-at-(0,1)", [(x, x + 1.0) for x in _grid(-2.0, 2.0, 17)]),
        Curve("tangent-at-(1,0)", [(x, x - 1.0) for x in _grid(-1.0, 3.0, 17)]),
    ]
    return FigureData("reflect", curves)


def inverse_derivative_figure(samples: int = 129, a: float = 2.0) -> FigureData:
    """Mirror-point tangents of exp and log with reciprocal slopes.

    At (ln a, a) the exponential's tangent slope is a; reflected to (a, ln a)
    on the log curve the slope is 1/a.
    """
    _check_samples(samples)
    v = ln(a)
    exp_slope = (taylor_exp(v + 1e-7, 1e-15).partial_sum - taylor_exp(v - 1e-7, 1e-15).partial_sum) / 2e-7
    log_slope = (ln(a + 1e-7) - ln(a - 1e-7)) / 2e-7
    curves = [
        Curve("y=exp(x)", [(x, taylor_exp(x, 1e-15).partial_sum) for x in _grid(-2.0, 2.0, samples)]),
        Curve("y=ln(x)", [(x, ln(x)) for x in _grid(0.15, 6.0, samples)]),
        Curve("y=x", [(x, x) for x in _grid(-2.0, 6.0, 17)]),
        Curve(
            "tangent-exp",
            [(x, a + exp_slope * (x - v)) for x in _grid(v - 1.0, v + 1.0, 17)],
        ),
        Curve(
            "tangent-log",
            [(x, v + log_slope * (x - a)) for x in _grid(a - 1.5, a + 1.5, 17)],
        ),
    ]
    return FigureData("inverse-derivative", curves)


def napier_figure(samples: int = 129) -> FigureData:
    """Napier's scaled-sine logarithm curve with the 18-degree table entry."""
    _check_samples(samples)
    lo, hi = NAPIER_SCALE // 10, NAPIER_SCALE
    ys = [int(round(v)) for v in _grid(float(lo), float(hi), samples)]
    curve = [(float(y), napier_log(y).napier_log) for y in ys]
    entry = napier_log(3_090_170)
    return FigureData(
        "napier",
        [
            Curve("napier-log", curve),
            Curve("entry-sin-18deg", [(float(entry.scaled_sine), entry.napier_log)]),
        ],
    )


_BUILDERS = {
    "exp-stretch": exp_stretch_figure,
    "reflect": reflect_figure,
    "inverse-derivative": inverse_derivative_figure,
    "napier": napier_figure,
}


def build_figure(figure_id: str, samples: int = 129) -> FigureData:
    if figure_id not in _BUILDERS:
        raise ValueError(f"unknown figure {figure_id!r}; choose from {FIGURE_IDS}")
    fig = _BUILDERS[figure_id](samples)
    for curve in fig.curves:
        for x, y in curve.points:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite sample in figure {figure_id}")
        if any(curve.points[i][0] > curve.points[i + 1][0] for i in range(len(curve.points) - 1)):
            raise ValueError(f"unsorted samples in figure {figure_id}")
    return fig
