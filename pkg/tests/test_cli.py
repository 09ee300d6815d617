import csv
import io
import json
import math
import subprocess
import sys

import pytest

from frechet_kl import KlResult, cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestEval:
    def test_pdf(self):
        assert run("eval", "pdf", "--alpha", "1", "--x", "1") == (0, "3.67879441171442e-1\n", "")

    def test_moment_undefined(self):
        assert run("eval", "moment", "--alpha", "2", "--k", "2")[1] == "inf\n"

    def test_skewness(self):
        code, out, _ = run("eval", "skewness", "--alpha", "4")
        assert code == 0 and out.startswith("5.605") and out.strip() == "5.60513821689599e0"

    def test_kurtosis_infinite(self):
        assert run("eval", "kurtosis", "--alpha", "4")[1] == "inf\n"

    def test_generalized_pdf(self):
        code, out, _ = run("eval", "pdf", "--alpha", "1", "--s", "2", "--m", "1", "--x", "3")
        assert code == 0 and float(out) == pytest.approx(0.18393972058572117, rel=1e-14)

    def test_quantile(self):
        assert run("eval", "quantile", "--alpha", "1", "--u", "0.5")[1] == "1.44269504088896e0\n"

    @pytest.mark.parametrize(
        "argv",
        [
            ("eval", "pdf", "--alpha", "0", "--x", "1"),
            ("eval", "pdf", "--alpha", "-2", "--x", "1"),
            ("eval", "quantile", "--alpha", "1", "--u", "1.5"),
            ("eval", "quantile", "--alpha", "1"),
            ("eval", "moment", "--alpha", "3", "--k", "0"),
            ("eval", "skewness", "--alpha", "5", "--s", "2"),
            ("eval", "entropy", "--alpha", "1"),
        ],
    )
    def test_usage_errors(self, argv):
        code, out, err = run(*argv)
        assert code == 2 and out == ""
        assert err.strip()


class TestKl:
    def test_default_closed_form(self):
        code, out, _ = run("kl", "--alpha1", "2", "--alpha2", "2")
        assert code == 0
        assert out.splitlines()[:2] == ["value: 0", "method: closed-form"]

    def test_reference_value(self):
        out = run("kl", "--alpha1", "1", "--alpha2", "2")[1]
        assert out.splitlines()[0].startswith("value: 8.84068484")

    def test_quadrature(self):
        code, out, _ = run("kl", "--alpha1", "1", "--alpha2", "2", "--method", "quadrature")
        lines = dict(line.split(": ") for line in out.splitlines())
        assert code == 0 and lines["method"] == "quadrature"
        assert float(lines["value"]) == pytest.approx(0.8840684843, abs=1e-8)

    def test_monte_carlo(self):
        code, out, _ = run(
            "kl", "--alpha1", "1", "--alpha2", "2", "--method", "monte-carlo",
            "--n", "1000000", "--seed", "42",
        )
        lines = dict(line.split(": ") for line in out.splitlines())
        assert code == 0 and lines["samples"] == "1000000"
        assert abs(float(lines["value"]) - 0.8840684843) <= 3 * float(lines["error_estimate"])

    def test_deterministic_output(self):
        argv = ("kl", "--alpha1", "1", "--alpha2", "3", "--method", "monte-carlo", "--n", "5000", "--seed", "3")
        assert run(*argv) == run(*argv)

    def test_invalid_shape(self):
        assert run("kl", "--alpha1", "0", "--alpha2", "1")[0] == 2

    def test_numerical_failure_exit_code(self, monkeypatch):
        from frechet_kl.quadrature import QuadratureError, QuadratureResult

        def boom(*a, **k):
            raise QuadratureError("no convergence", QuadratureResult(1.5, 0.1, 15))

        monkeypatch.setattr(cli, "kl_quadrature", boom)
        code, out, err = run("kl", "--alpha1", "1", "--alpha2", "2", "--method", "quadrature")
        assert code == 3 and out == ""
        assert "best estimate: 1.5" in err


class TestVerify:
    def test_small_grid_csv(self, tmp_path):
        path = tmp_path / "v.csv"
        code, out, _ = run(
            "verify", "--alpha1-grid", "1,2,3", "--alpha2-grid", "1,2,3", "--out", str(path)
        )
        assert code == 0 and out == "9 pairs, 0 disagreements\n"
        rows = list(csv.DictReader(path.open()))
        assert len(rows) == 9
        assert list(rows[0]) == ["alpha1", "alpha2", "kl_closed", "kl_quad", "kl_quad_err", "agree"]
        assert all(r["agree"] == "true" for r in rows)
        assert path.read_bytes().count(b"\r") == 0

    def test_boxed_is_informational(self, tmp_path):
        path = tmp_path / "v.csv"
        code, out, _ = run(
            "verify", "--alpha1-grid", "3", "--alpha2-grid", "3",
            "--methods", "closed-form,boxed-as-printed", "--out", str(path),
        )
        (row,) = csv.DictReader(path.open())
        assert code == 0
        assert float(row["kl_closed"]) == 0.0 and float(row["kl_boxed"]) == pytest.approx(1.0, abs=1e-12)
        assert row["agree"] == ""

    def test_diagonal_zero(self, tmp_path):
        path = tmp_path / "v.json"
        code, _, _ = run(
            "verify", "--alpha1-grid", "2", "--alpha2-grid", "2",
            "--methods", "closed-form,quadrature,monte-carlo,boxed-as-printed",
            "--format", "json", "--out", str(path),
        )
        doc = json.loads(path.read_text())
        (row,) = doc["rows"]
        assert code == 0
        for key in ("kl_closed", "kl_quad", "kl_mc", "kl_boxed"):
            assert row[key] == pytest.approx(0.0, abs=1e-9)
        assert doc["summary"] == {"pairs": 1, "disagreements": 0}

    def test_json_infinity_convention(self, tmp_path):
        path = tmp_path / "v.json"
        run("verify", "--alpha1-grid", "0.01", "--alpha2-grid", "10",
            "--methods", "closed-form", "--format", "json", "--out", str(path))
        (row,) = json.loads(path.read_text())["rows"]
        assert row["kl_closed"] is None and row["kl_closed_defined"] is False

    def test_disagreement_exit_code(self, monkeypatch):
        monkeypatch.setattr(cli, "kl_closed_form", lambda p, q: KlResult(1.0, "closed-form"))
        code, out, err = run("verify", "--alpha1-grid", "1", "--alpha2-grid", "2")
        assert code == 1
        assert err == "1 pairs, 1 disagreements\n"

    @pytest.mark.parametrize(
        "argv",
        [
            ("--alpha1-grid", ""),
            ("--alpha1-grid", "1,-2"),
            ("--methods", "closed-form,bogus"),
            ("--tol", "0"),
            ("--methods", "monte-carlo", "--mc-samples", "1"),
            ("--seed", "-1"),
        ],
    )
    def test_bad_spec(self, argv):
        assert run("verify", *argv)[0] == 2

    def test_json_round_trip_is_bit_exact(self, tmp_path):
        path = tmp_path / "v.json"
        run("verify", "--alpha1-grid", "0.25,1.5", "--alpha2-grid", "0.7,8",
            "--methods", "closed-form,quadrature,monte-carlo", "--mc-samples", "1000",
            "--format", "json", "--out", str(path))
        rows = cli.sweep((0.25, 1.5), (0.7, 8.0), {"closed-form", "quadrature", "monte-carlo"},
                         mc_samples=1000)
        parsed = json.loads(path.read_text())["rows"]
        for got, want in zip(parsed, rows):
            for key, value in want.items():
                assert got[key] == value

    def test_stdout_is_deterministic(self):
        argv = ("verify", "--alpha1-grid", "1,2", "--alpha2-grid", "3",
                "--methods", "closed-form,monte-carlo", "--mc-samples", "2000", "--seed", "77")
        assert run(*argv) == run(*argv)


class TestDerivation:
    def test_table(self):
        code, out, _ = run("derivation", "--alpha1", "1", "--alpha2", "2")
        lines = out.splitlines()
        assert code == 0 and lines[0].split() == ["integral", "closed_form", "quadrature", "abs_diff"]
        closed = [float(line.split()[1]) for line in lines[1:]]
        assert closed == pytest.approx([1.0, 0.5772156649015329, 1.0, 2.0], rel=1e-14)
        assert all(float(line.split()[3]) < 1e-8 for line in lines[1:])

    def test_equal_shapes(self):
        lines = run("derivation", "--alpha1", "3", "--alpha2", "3")[1].splitlines()
        assert lines[3].split()[1:3] == lines[4].split()[1:3]

    def test_second_row_at_two(self):
        lines = run("derivation", "--alpha1", "2", "--alpha2", "2")[1].splitlines()
        assert float(lines[2].split()[1]) == pytest.approx(0.5772156649015329 / 4, rel=1e-14)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frechet_kl.cli", "eval", "cdf", "--alpha", "1", "--x", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3.67879441171442e-1\n"


def test_formatting_helpers():
    assert cli.fmt_human(math.inf) == "inf"
    assert cli.fmt_human(0.0) == "0"
    assert cli.fmt_human(123456.0) == "1.23456000000000e5"
    assert cli.fmt_machine(0.1) == "0.1"
    assert cli.fmt_machine(math.inf) == "inf"
    assert cli.fmt_machine(None) == ""
    x = 0.1 + 0.2
    assert float(cli.fmt_machine(x)) == x
