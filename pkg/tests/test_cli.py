import argparse
import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from nlfourier.cli import main, parse_degrees, parse_phase, parse_ps
from nlfourier.phase import PhaseParam
from nlfourier.signals import builtin
from nlfourier.transform import NlPolynomial, read_coeffs_csv


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsers:
    def test_degrees(self):
        assert parse_degrees("4") == [4]
        assert parse_degrees("2,8") == [2, 8]
        assert parse_degrees("2..16") == [2, 4, 8, 16]

    def test_phase(self):
        assert parse_phase("0.5") == (0.5, 0.0)
        assert parse_phase("0.5,1.2") == (0.5, 1.2)

    def test_ps(self):
        assert parse_ps("1,2,inf") == [1.0, 2.0, math.inf]

    @pytest.mark.parametrize("bad", ["x", "3..2", "0..4"])
    def test_bad_degrees(self, bad):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_degrees(bad)

    def test_negative_degree_exits_2(self, capsys):
        code, _, err = run(["analyze", "--signal", "cos", "--a", "0", "--n", "-1"], capsys)
        assert code == 2 and "error" in err


class TestAnalyze:
    def test_deterministic_bytes(self, tmp_path):
        outs = []
        for i in range(2):
            path = tmp_path / f"c{i}.csv"
            assert main(["analyze", "--signal", "holder:alpha=0.5", "--a", "0.6,0.4", "--n", "8",
                         "--out", str(path)]) == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]

    def test_json_output(self, capsys):
        code, out, _ = run(["analyze", "--signal", "cos", "--a", "0", "--n", "2", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc

    def test_round_trip_reconstruct(self, tmp_path, capsys):
        coeffs = tmp_path / "c.csv"
        assert main(["analyze", "--signal", "exp-sin2", "--a", "0.5,0.3", "--n", "96",
                     "--out", str(coeffs)]) == 0
        samples = tmp_path / "s.csv"
        assert main(["reconstruct", "--coeffs", str(coeffs), "--points", "64",
                     "--out", str(samples)]) == 0
        with open(samples) as fh:
            rows = list(csv.DictReader(fh))
        t = np.array([float(r["t"]) for r in rows])
        vals = np.array([float(r["S_96_re"]) for r in rows])
        np.testing.assert_allclose(vals, builtin("exp-sin2")(t), atol=1e-10)
        cv, _ = read_coeffs_csv(coeffs)
        np.testing.assert_allclose(vals, np.real(NlPolynomial(cv)(t)), atol=1e-13)

    def test_csv_input(self, tmp_path, capsys):
        m = 256
        t = -math.pi + 2 * math.pi * np.arange(m) / m
        path = tmp_path / "in.csv"
        np.savetxt(path, np.column_stack([t, np.cos(2 * t)]), delimiter=",", header="t,value",
                   comments="")
        code, out, err = run(["analyze", "--csv", str(path), "--a", "0", "--n", "3"], capsys)
        assert code == 0, err

    def test_missing_signal_exits_2(self, capsys):
        code, _, err = run(["analyze", "--a", "0", "--n", "3"], capsys)
        assert code == 2 and "error" in err

    def test_bad_modulus_exits_2(self, capsys):
        code, _, err = run(["analyze", "--signal", "cos", "--a", "1.0", "--n", "3"], capsys)
        assert code == 2 and "error" in err

    def test_unknown_signal_exits_2(self, capsys):
        code, _, err = run(["analyze", "--signal", "nope", "--a", "0", "--n", "3"], capsys)
        assert code == 2


class TestReconstruct:
    def test_error_table(self, capsys):
        code, out, _ = run(["reconstruct", "--signal", "square", "--a", "0.3", "--n", "8,32",
                            "--p", "2,inf"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert len(rows) == 8
        l2 = {(r["operator"], r["n"]): float(r["error"]) for r in rows if r["p"] == "2.0"}
        assert l2[("partial_sum", "32")] < l2[("partial_sum", "8")]

    def test_degree_above_stored(self, tmp_path, capsys):
        coeffs = tmp_path / "c.csv"
        main(["analyze", "--signal", "cos", "--a", "0", "--n", "2", "--out", str(coeffs)])
        code, _, err = run(["reconstruct", "--coeffs", str(coeffs), "--n", "5"], capsys)
        assert code == 2 and "exceeds" in err


class TestVerify:
    def test_small_run_passes(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        code, _, err = run(["verify", "--signal", "square;abs-sin", "--a", "0.5", "--n", "2,4",
                            "--theorem", "all", "--trials", "10", "--format", "json",
                            "--out", str(out)], capsys)
        assert code == 0, err
        doc = json.loads(out.read_text())
        assert doc["meta"]["version"]
        ids = {r["theorem_id"] for r in doc["reports"]}
        assert "bernstein" in ids and "jackson" in ids
        assert all(r["pass"] for r in doc["reports"])
        assert "checks passed" in err

    def test_csv_report(self, tmp_path, capsys):
        out = tmp_path / "r.csv"
        code, _, _ = run(["verify", "--signal", "triangle", "--a", "0.3", "--n", "4",
                          "--theorem", "lebesgue-sup,fejer-sup", "--format", "csv",
                          "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "theorem_id,a,n,p,lhs,rhs,pass"
        assert len(lines) == 3
        doc = json.loads((tmp_path / "r.json").read_text())
        assert len(doc["reports"]) == 2

    def test_unknown_theorem_exits_2(self, capsys):
        code, _, _ = run(["verify", "--signal", "cos", "--a", "0", "--n", "2", "--theorem", "nope"],
                         capsys)
        assert code == 2


class TestLebesgue:
    def test_table(self, capsys):
        code, out, _ = run(["lebesgue", "--n", "0,1,2,1024"], capsys)
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert float(rows[0]["lambda_n"]) == 1.0
        assert float(rows[1]["lambda_n"]) == pytest.approx(1.4359911241769, abs=1e-12)
        assert rows[0]["lambda_n_over_log_n"] == "nan"
        assert float(rows[3]["lambda_n_over_log_n"]) == pytest.approx(0.589, abs=2e-3)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "nlfourier", "--version"], capture_output=True,
                         text=True)
    assert res.returncode == 0 and "0.1.0" in res.stdout
