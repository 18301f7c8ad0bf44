"""CLI surface: subcommands, grids, formats, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from elab import limits, series
from elab.cli import capture_command, parse_grid

E_REF = 2.718281828459045
PITFALL_LAST_C1 = 2.718145926825225  # (1 + 1/10^4)^10^4, exact-oracle float


def run_json(args):
    out, code = capture_command(args)
    assert code == 0, out
    return json.loads(out)


class TestGridLanguage:
    def test_pow10(self):
        assert parse_grid("pow10:0..3") == [1, 10, 100, 1000]

    def test_dyadic(self):
        assert parse_grid("dyadic:1..5") == [1, 2, 3, 4, 5]

    def test_list(self):
        assert parse_grid("list:5,17,1") == [5, 17, 1]

    def test_rejects_malformed(self):
        for bad in ("pow10:3..1", "nope:1..2", "pow10:", "list:", "pow10:a..b"):
            with pytest.raises(SystemExit):
                parse_grid(bad)


class TestEstimate:
    def test_stretch(self):
        rep = run_json(["estimate", "--method", "stretch", "--base", "3", "--h", "1e-4"])
        assert rep["method"] == "stretch"
        assert rep["estimate"] == pytest.approx(2.71814, abs=2e-5)
        assert rep["error_vs_reference"] == pytest.approx(rep["estimate"] - E_REF, abs=1e-18)

    def test_compound_n_one(self):
        rep = run_json(["estimate", "--method", "compound", "--n", "1"])
        assert rep["estimate"] == 2.0
        assert rep["certificate"] is not None
        assert abs(rep["error_vs_reference"]) <= rep["certificate"]

    def test_series_17_terms(self):
        rep = run_json(["estimate", "--method", "series", "--terms", "17"])
        assert abs(rep["estimate"] - E_REF) <= 1e-15
        assert rep["certificate"] >= abs(rep["error_vs_reference"])

    def test_euler(self):
        rep = run_json(["estimate", "--method", "euler", "--n", "1000"])
        assert rep["estimate"] == pytest.approx(E_REF, abs=2e-3)

    def test_log_inverse(self):
        rep = run_json(["estimate", "--method", "log-inverse"])
        assert rep["estimate"] == pytest.approx(E_REF, abs=1e-12)

    def test_unknown_method_exits_2(self):
        _, code = capture_command(["estimate", "--method", "alchemy"])
        assert code == 2

    def test_invalid_parameter_exits_2(self):
        _, code = capture_command(["estimate", "--method", "compound", "--n", "0"])
        assert code == 2


class TestTable:
    def test_compound_first_row(self):
        out, code = capture_command(["table", "--kind", "compound", "--grid", "pow10:0..4"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,value,error,bound"
        first = lines[1].split(",")
        assert first[0] == "1" and float(first[1]) == 2.0

    def test_compound_bounds_certify_errors(self):
        rows = json.loads(run_json_text(["table", "--kind", "compound", "--grid", "pow10:0..4",
                                         "--format", "json"]))
        for row in rows:
            assert abs(row["error"]) <= row["bound"]

    def test_pitfall_last_c1_row(self):
        out, code = capture_command(
            ["table", "--kind", "pitfall", "--c", "0,1,2", "--grid", "pow10:1..4"]
        )
        assert code == 0
        lines = out.strip().splitlines()[1:]
        assert len(lines) == 12  # c-major blocks of 4
        c1_last = lines[7].split(",")
        assert float(c1_last[1]) == pytest.approx(PITFALL_LAST_C1, rel=1e-14)
        assert float(c1_last[1]) == pytest.approx(2.71815, abs=1e-5)

    def test_pitfall_refined_block(self):
        out, _ = capture_command(
            ["table", "--kind", "pitfall", "--c", "1", "--grid", "pow10:2..4", "--refined"]
        )
        lines = out.strip().splitlines()[1:]
        assert len(lines) == 6
        refined_last = float(lines[-1].split(",")[1])
        assert abs(refined_last - E_REF) <= 1e-5

    def test_sinc_monotone(self):
        rows = json.loads(run_json_text(["table", "--kind", "sinc", "--grid", "dyadic:1..20",
                                         "--format", "json"]))
        values = [r["value"] for r in rows]
        assert values == sorted(values)
        assert values[-1] <= 1.0

    def test_euler_and_compound_x(self):
        rows = json.loads(run_json_text(["table", "--kind", "euler", "--grid", "list:4",
                                         "--x", "1", "--format", "json"]))
        assert rows[0]["value"] == 2.44140625
        rows = json.loads(run_json_text(["table", "--kind", "compound-x", "--grid", "list:10",
                                         "--x", "-1", "--format", "json"]))
        assert rows[0]["value"] == pytest.approx(0.3486784401, abs=1e-15)

    def test_parallel_matches_serial(self):
        a, _ = capture_command(["table", "--kind", "compound", "--grid", "pow10:0..3"])
        b, _ = capture_command(["table", "--kind", "compound", "--grid", "pow10:0..3", "--parallel"])
        assert a == b

    def test_unknown_kind_exits_2(self):
        _, code = capture_command(["table", "--kind", "nope", "--grid", "pow10:0..2"])
        assert code == 2

    def test_bad_grid_exits_2(self):
        _, code = capture_command(["table", "--kind", "compound", "--grid", "pow10:4..0"])
        assert code == 2


def run_json_text(args):
    out, code = capture_command(args)
    assert code == 0, out
    return out


class TestFormatsAndDeterminism:
    def test_csv_json_duals(self):
        csv_out = run_json_text(["table", "--kind", "series", "--grid", "list:0,5,17"])
        json_rows = json.loads(run_json_text(
            ["table", "--kind", "series", "--grid", "list:0,5,17", "--format", "json"]
        ))
        csv_rows = []
        for line in csv_out.strip().splitlines()[1:]:
            n_s, v_s, e_s, b_s = line.split(",")
            csv_rows.append((int(n_s), float(v_s), float(e_s), None if not b_s else float(b_s)))
        assert len(csv_rows) == len(json_rows) == 3
        for (n, v, e, b), row in zip(csv_rows, json_rows):
            assert (n, v, e, b) == (row["n"], row["value"], row["error"], row["bound"])

    def test_seventeen_digit_round_trip(self):
        rows = json.loads(run_json_text(["table", "--kind", "compound", "--grid", "list:7",
                                         "--format", "json"]))
        assert rows[0]["value"] == limits.compound(7)

    def test_byte_identical_reruns(self):
        args = ["verify", "--suite", "cli", "--seed", "123"]
        assert capture_command(args) == capture_command(args)

    def test_out_flag_writes_file(self, tmp_path):
        target = tmp_path / "rows.csv"
        _, code = capture_command(["table", "--kind", "compound", "--grid", "list:1,2",
                                   "--out", str(target)])
        assert code == 0
        assert target.read_text().startswith("n,value,error,bound")

    def test_global_flag_position_flexible(self):
        a = capture_command(["--format", "json", "table", "--kind", "compound", "--grid", "list:4"])
        b = capture_command(["table", "--kind", "compound", "--grid", "list:4", "--format", "json"])
        assert a == b


class TestFigures:
    def test_exp_stretch_shares_intercept(self):
        fig = run_json(["figures", "--figure", "exp-stretch"])
        by_label = {c["label"]: c["points"] for c in fig["curves"]}
        for label in ("y=8^x", "y=8^(x/6)"):
            assert [0.0, 1.0] in by_label[label]

    def test_reflect_tangents_have_slope_one(self):
        fig = run_json(["figures", "--figure", "reflect"])
        by_label = {c["label"]: c["points"] for c in fig["curves"]}
        for label in ("tangent-at-(0,1)", "tangent-at-(1,0)"):
            pts = by_label[label]
            (x0, y0), (x1, y1) = pts[0], pts[-1]
            assert (y1 - y0) / (x1 - x0) == pytest.approx(1.0, abs=1e-12)

    def test_inverse_derivative_reciprocal_pair(self):
        fig = run_json(["figures", "--figure", "inverse-derivative"])
        by_label = {c["label"]: c["points"] for c in fig["curves"]}
        t_exp = by_label["tangent-exp"]
        t_log = by_label["tangent-log"]
        slope_exp = (t_exp[-1][1] - t_exp[0][1]) / (t_exp[-1][0] - t_exp[0][0])
        slope_log = (t_log[-1][1] - t_log[0][1]) / (t_log[-1][0] - t_log[0][0])
        assert slope_exp == pytest.approx(2.0, abs=1e-5)
        assert slope_log == pytest.approx(0.5, abs=1e-6)

    def test_napier_builds(self):
        fig = run_json(["figures", "--figure", "napier"])
        labels = {c["label"] for c in fig["curves"]}
        assert "napier-log" in labels and "entry-sin-18deg" in labels

    def test_unknown_figure_exits_2(self):
        _, code = capture_command(["figures", "--figure", "spiral"])
        assert code == 2

    def test_sampling_bounds(self):
        _, code = capture_command(["figures", "--figure", "reflect", "--samples", "8"])
        assert code == 2


class TestVerifyCommand:
    def test_single_suite_passes(self):
        out, code = capture_command(["verify", "--suite", "powcore", "--seed", "0"])
        assert code == 0
        assert "ok   powcore.round-trip" in out
        assert "0 failed" in out

    def test_seeded_suite_deterministic(self):
        a = capture_command(["verify", "--suite", "series", "--seed", "7"])
        b = capture_command(["verify", "--suite", "series", "--seed", "7"])
        assert a == b

    def test_unknown_suite_exits_2(self):
        _, code = capture_command(["verify", "--suite", "nonsense"])
        assert code == 2

    def test_failure_exits_1_naming_check(self, monkeypatch):
        from elab import verify as verify_mod

        def broken(rng):
            raise AssertionError("deliberately broken")

        patched = dict(verify_mod.SUITES)
        patched["powcore"] = [("always-fails", broken)]
        monkeypatch.setattr(verify_mod, "SUITES", patched)
        out, code = capture_command(["verify", "--suite", "powcore"])
        assert code == 1
        assert "FAIL powcore.always-fails" in out
