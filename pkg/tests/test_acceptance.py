"""Acceptance gate: every criterion at its stated tolerance, one line each.

Each test prints a PASS line on success (pytest -s shows them; the same
checks run inside ``elab verify``).  Runtime budgets are asserted where the
criterion states one.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import pytest

from elab import limits, loginv, odesolve, powcore, series, slopes, verify
from elab.cli import capture_command
from elab.config import CONFIG

E_REF = 2.718281828459045


def _report(name: str, detail: str = "") -> None:
    print(f"PASS {name}" + (f": {detail}" if detail else ""))


def _timed(budget_s: float):
    class _Timer:
        def __enter__(self):
            self.t0 = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.t0
            if exc == (None, None, None):
                assert self.elapsed < budget_s, f"runtime {self.elapsed:.1f}s over budget {budget_s}s"
            return False

    return _Timer()


def test_stretch_recipe():
    with _timed(1.0) as t:
        dq = slopes.diff_quotient(3.0, 1e-4)
        assert 1.0986 <= dq <= 1.0987
        est = slopes.estimate_e_by_stretch(3.0, 1e-4)
        assert abs(est - E_REF) <= 2e-4
        rounded = slopes.estimate_from_slope(3.0, 1.1)
        target = powcore.nth_root(powcore.int_pow(3.0, 10), 11, 1e-12)
        assert abs(rounded - target) <= 5e-4
        assert abs(rounded - 2.715) <= 5e-4
    _report("stretch-recipe", f"dq={dq:.6f} est={est:.7f} in {t.elapsed:.2f}s")


def test_compound_limit():
    with _timed(10.0) as t:
        v = limits.compound(10 ** 6)
        assert abs(v - E_REF) <= 2e-6
        for n in list(range(1, 65)) + [100, 1000, 10_000]:
            exact = float(limits.compound_exact(1, n))
            assert limits.ulps_apart(limits.compound(n), exact) <= 4.0
        for n in (1000, 4000, 16_000, 100_000):
            r = (E_REF - limits.compound(n)) / (E_REF - limits.compound(2 * n))
            assert 1.8 <= r <= 2.2
    _report("compound-limit", f"compound(1e6)={v!r} in {t.elapsed:.2f}s")


def test_series_facts():
    with _timed(30.0) as t:
        s17 = series.factorial_partial_sum(17)
        assert abs(s17 - E_REF) <= 1e-15
        inv_e = series.taylor_exp(-1.0, 1e-15).partial_sum
        assert abs(inv_e - 1.0 / E_REF) <= 1e-15
        s_exact = series.factorial_partial_sum_exact(40)
        for n, m in ((10, 5), (100, 10), (1000, 12), (10_000, 15)):
            gap = abs(float(s_exact - limits.compound_exact(1, n)))
            assert gap <= series.series_error_certificate(n, m)
    _report("series-facts", f"S_17={s17!r} exp(-1)={inv_e!r} in {t.elapsed:.2f}s")


def test_binomial_bridge():
    for n in range(1, 61):
        assert series.binomial_row_sum_exact(n) == limits.compound_exact(1, n)
    for n in (1, 2, 3, 10, 100, 500, 1000):
        for k in range(0, min(n, 60) + 1):
            assert series.binomial_term_exact(n, k) <= Fraction(1, math.factorial(k))
            assert series.binomial_term(n, k) > 0.0
    _report("binomial-bridge", "literal equality n <= 60; domination sampled")


def test_euler_method():
    with _timed(20.0) as t:
        xs = (Fraction(1), Fraction(1, 2), Fraction(-1, 3), Fraction(2))
        ns = list(range(1, 65)) + [100, 128, 256, 512, 777, 1000]
        for x in xs:
            for n in ns:
                assert odesolve.euler_path_exact(x, n)[-1] == limits.compound_exact(x, n)
    _report("euler-method", f"{len(xs)}x{len(ns)} exact equalities in {t.elapsed:.2f}s")


def test_euler_identity():
    z = series.complex_exp(CONFIG.pi, 1e-15)
    resid = math.hypot(z.re + 1.0, z.im)
    assert resid <= 1e-12
    rng = __import__("random").Random(20260810)
    for _ in range(100):
        theta = rng.uniform(-10.0, 10.0)
        assert abs(series.complex_exp(theta, 1e-15).modulus() - 1.0) <= 1e-12
    _report("euler-identity", f"|exp(i pi)+1|={resid:.2e}")


def test_inverse_and_quadrature():
    rng = __import__("random").Random(18170614)
    for _ in range(200):
        a = rng.uniform(0.1, 100.0)
        assert abs(loginv.reflection_slope_check(a, 1e-6).product - 1.0) <= 1e-6
    q = loginv.quadrature_log(2.0, 10_000)
    target = loginv.nat_log(2.0).value
    assert abs(q - target) <= 1e-8
    for x in (0.5, 2.0, 5.0, 10.0):
        t = loginv.nat_log(x).value
        errs = [abs(loginv.quadrature_log(x, p) - t) for p in (125, 250, 500)]
        assert 3.5 <= errs[0] / errs[1] <= 4.5
        assert 3.5 <= errs[1] / errs[2] <= 4.5
    _report("inverse-quadrature", f"slope products within 1e-6; |q-ln2|={abs(q-target):.1e}")


def test_foundation_property_suites():
    rng = __import__("random").Random(17481)
    for _ in range(1000):
        a = rng.uniform(1.05, 10.0)
        b = rng.uniform(-5.0, 4.0)
        c = rng.uniform(b + 0.1, 5.0)
        x = rng.uniform(b + 0.05 * (c - b), c - 0.05 * (c - b))
        assert powcore.chord_gap(a, b, c, x) > 0.0
    for _ in range(1000):
        a = rng.uniform(1.05, 50.0)
        q = [slopes.diff_quotient(a, h) for h in
             (-rng.uniform(0.3, 1.0), -rng.uniform(0.001, 0.25),
              rng.uniform(0.001, 0.25), rng.uniform(0.3, 1.0))]
        assert q[0] < q[1] < q[2] < q[3]
    for _ in range(200):
        a = rng.uniform(1.000001, 100.0)
        target = loginv.nat_log(a).value
        prev = None
        for k in (10, 20, 30):
            enc = slopes.slope_enclosure(a, k).interval
            assert enc.lo <= target <= enc.hi
            if prev is not None:
                slack = 4.0 * math.ulp(abs(prev.hi))
                assert enc.lo >= prev.lo - slack and enc.hi <= prev.hi + slack
            prev = enc
    for i in range(1, 1001):
        x = 0.25 * i / 1000.0
        assert powcore.nth_root(1.0 + x, 2, 1e-15) < 1.0 + 0.6 * x
    _report("foundations", "convexity, ordering, enclosures, sqrt bound")


def test_history_reproductions():
    entry = loginv.napier_log(3_090_170)
    assert round(entry.napier_log) == 11_743_590
    assert abs(entry.napier_log - 11_743_586) <= 10.0
    briggs = loginv.briggs_log10(2488.0)
    assert abs(briggs - 3.39585037601878) <= 1e-11
    _report("history", f"napier={entry.napier_log:.3f} briggs={briggs!r}")


def test_pitfall_and_counterexample():
    row = limits.pitfall_table([2.0], [10 ** 6])[0][0]
    assert abs(row - 7.3890561) <= 1e-3
    refined = float(limits.refined_compound_exact(10 ** 4))
    assert abs(refined - E_REF) <= 1e-5
    inter = limits.interchange_counterexample(100)
    assert (inter.row_limit, inter.column_limit) == (1.0, 0.0)
    _report("pitfall-counterexample", f"c2@1e6={row:.6f} refined@1e4={refined!r}")


def test_full_verify_under_budget():
    t0 = time.perf_counter()
    results = verify.run(seed=0)
    elapsed = time.perf_counter() - t0
    failures = [r for r in results if not r.ok]
    assert not failures, failures
    assert {r.suite for r in results} == set(verify.SUITES)
    assert elapsed < 120.0, f"verify took {elapsed:.1f}s"
    _report("verify-all-suites", f"{len(results)} checks in {elapsed:.1f}s")


def test_cmd_verify_exit_code():
    out, code = capture_command(["verify", "--seed", "0"])
    assert code == 0
    assert "0 failed" in out
    _report("cmd-verify-exit-0")
