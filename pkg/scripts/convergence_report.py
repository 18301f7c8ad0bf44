#!/usr/bin/env python3
"""Print every construction of the natural base side by side.

Runs each estimator over a widening parameter grid and shows the signed
error against the 16-digit reference constant, plus the certified bound
where one exists.  A quick way to eyeball the convergence rates: the
compound/tangent-stepping routes gain one digit per decade of n, the
factorial series gains roughly a digit per term.

Usage: python scripts/convergence_report.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from elab import limits, odesolve, series, slopes  # noqa: E402
from elab.config import CONFIG  # noqa: E402

E = CONFIG.e_reference


def main() -> None:
    print(f"reference constant: {E!r}\n")

    print("compound (1 + 1/n)^n")
    for k in range(0, 8):
        n = 10 ** k
        v = limits.compound(n)
        bound = ""
        if n <= 10 ** 4:
            bound = f"  certified |err| <= {series.series_error_certificate(n, min(n, 20)):.3e}"
        print(f"  n=10^{k}: {v:.15f}  err {v - E:+.3e}{bound}")

    print("\nfactorial series sum(1/k!)")
    for m in (1, 2, 5, 9, 13, 17):
        v = series.factorial_partial_sum(m)
        print(f"  m={m:2d}: {v:.15f}  err {v - E:+.3e}  tail <= {series.tail_bound(m):.3e}")

    print("\nstretch estimator a^(1/slope) at a = 3")
    for h in (1e-1, 1e-2, 1e-4, 1e-6, 1e-8):
        v = slopes.estimate_e_by_stretch(3.0, h)
        print(f"  h={h:7.0e}: {v:.15f}  err {v - E:+.3e}")

    print("\ntangent stepping for y' = y at x = 1")
    for k in range(0, 7):
        n = 10 ** k
        v = odesolve.euler_final(1.0, n)
        print(f"  n=10^{k}: {v:.15f}  err {v - E:+.3e}")

    print("\nslope enclosures of ln(a) at a = 10 (must bracket 2.302585...)")
    for k in (5, 10, 20, 30, 40):
        enc = slopes.slope_enclosure(10.0, k).interval
        print(f"  k={k:2d}: [{enc.lo:.15f}, {enc.hi:.15f}]  width {enc.width:.3e}")


if __name__ == "__main__":
    main()
