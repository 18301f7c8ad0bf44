#!/usr/bin/env python3
"""The classroom stretch recipe, step by step, with exact-oracle receipts.

Measures the secant slope of 3^x at its y-intercept, stretches the exponent
by the measured slope, and reads off the estimate; then repeats with the
rounded slope 1.1 to land on 3^(10/11), cross-checked against the eleventh
root of 3^10 computed by bisection.

Usage: python scripts/stretch_walkthrough.py [base] [h]
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from elab import powcore, slopes  # noqa: E402
from elab.config import CONFIG  # noqa: E402


def main() -> None:
    base = float(sys.argv[1]) if len(sys.argv) > 1 else 3.0
    h = float(sys.argv[2]) if len(sys.argv) > 2 else 1e-4

    slope = slopes.diff_quotient(base, h)
    est = slopes.estimate_e_by_stretch(base, h)
    print(f"secant slope of {base}^x through x=0 and x={h}: {slope:.6f}")
    print(f"stretched base {base}^(1/{slope:.6f}) = {est:.6f}")
    print(f"distance to reference: {est - CONFIG.e_reference:+.2e}\n")

    if base == 3.0:
        rounded = slopes.estimate_from_slope(3.0, 1.1)
        root = powcore.nth_root(powcore.int_pow(3.0, 10), 11, 1e-12)
        print(f"with the slope rounded to 1.1: 3^(10/11) = {rounded:.6f}")
        print(f"bisection check, 11th root of 3^10:       {root:.6f}")

    enc = slopes.slope_enclosure(base, 30).interval
    print(f"\nintercept slope of {base}^x is certified inside "
          f"[{enc.lo:.12f}, {enc.hi:.12f}]")


if __name__ == "__main__":
    main()
