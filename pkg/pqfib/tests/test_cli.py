"""Unit tests for pqfib.cli module."""

import json
from fractions import Fraction

import pytest

from pqfib import __version__
from pqfib.cli import EXACT, FLOAT, format_value, main, make_record, parse_scalar
from pqfib.config import PqfibConfig
from pqfib.errors import UsageError
from pqfib.verification import SuiteReport


@pytest.fixture(autouse=True)
def quiet_cli(mocker):
    """Keep CLI runs off the audit log and on default settings."""
    mocker.patch("pqfib.cli.get_typed_config", return_value=PqfibConfig())
    return mocker.patch("pqfib.cli.log_action")


def run_json(capsys, argv):
    """Run the CLI and decode its JSON record."""
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


class TestParseScalar:
    """Tests for numeric literal parsing."""

    @pytest.mark.unit
    def test_exact_literals(self):
        """Test integers and NUM/DEN become Fractions in exact mode."""
        assert parse_scalar("3", EXACT, "p") == Fraction(3)
        assert isinstance(parse_scalar("3", EXACT, "p"), Fraction)
        assert parse_scalar("-3/4", EXACT, "p") == Fraction(-3, 4)
        assert parse_scalar(" 6/8 ", EXACT, "p") == Fraction(3, 4)

    @pytest.mark.unit
    def test_float_literals(self):
        """Test integers and decimals become floats in float mode."""
        assert parse_scalar("3", FLOAT, "p") == 3.0
        assert isinstance(parse_scalar("3", FLOAT, "p"), float)
        assert parse_scalar("-0.25", FLOAT, "p") == -0.25
        assert parse_scalar("1e-3", FLOAT, "p") == 0.001

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text,mode",
        [("0.5", EXACT), ("1/2", FLOAT), ("1/0", EXACT), ("abc", EXACT), ("1/2/3", EXACT), ("", FLOAT)],
    )
    def test_rejected(self, text, mode):
        """Test mixed or malformed literals raise UsageError."""
        with pytest.raises(UsageError):
            parse_scalar(text, mode, "p")

    @pytest.mark.unit
    def test_error_names_option(self):
        """Test the message names the offending option."""
        with pytest.raises(UsageError, match="--q"):
            parse_scalar("0.5", EXACT, "q")


class TestFormatting:
    """Tests for value formatting and records."""

    @pytest.mark.unit
    def test_format_value(self):
        """Test rationals print as NUM/DEN and floats stay floats."""
        assert format_value(Fraction(6)) == "6"
        assert format_value(Fraction(-7, 4)) == "-7/4"
        assert format_value(3) == "3"
        assert format_value(0.5) == 0.5
        assert format_value(True) is True

    @pytest.mark.unit
    def test_make_record(self):
        """Test every record carries the command, inputs, results and version."""
        record = make_record("eval", {"n": 1}, {"degree": 0})

        assert record == {"command": "eval", "inputs": {"n": 1}, "results": {"degree": 0}, "version": __version__}


class TestEvalCommand:
    """Tests for pqfib eval."""

    @pytest.mark.unit
    def test_fibonacci_coefficients(self, capsys):
        """Test F_3 at p=2, q=3 is 6 s + x^2."""
        record = run_json(capsys, ["eval", "--n", "3", "--p", "2", "--q", "3"])

        assert record["command"] == "eval"
        assert record["results"]["degree"] == 2
        assert record["results"]["coefficients"] == [
            {"power": 0, "coefficient": "6"},
            {"power": 2, "coefficient": "1"},
        ]
        assert "value" not in record["results"]

    @pytest.mark.unit
    def test_value(self, capsys):
        """Test --x adds the value F_3(1/2, 1/8 | 2, 3) = 1."""
        record = run_json(capsys, ["eval", "--n", "3", "--p", "2", "--q", "3", "--s", "1/8", "--x", "1/2"])

        assert record["results"]["value"] == "1"
        assert record["inputs"]["s"] == "1/8"

    @pytest.mark.unit
    def test_zeroth(self, capsys):
        """Test F_0 is the zero polynomial and L_0 = 1."""
        fib = run_json(capsys, ["eval", "--n", "0", "--p", "2", "--q", "3"])
        lucas = run_json(capsys, ["eval", "--family", "lucas", "--n", "0", "--p", "2", "--q", "3"])

        assert fib["results"] == {"degree": -1, "coefficients": []}
        assert lucas["results"]["coefficients"] == [{"power": 0, "coefficient": "1"}]

    @pytest.mark.unit
    def test_float_mode(self, capsys):
        """Test float mode keeps numeric coefficients."""
        record = run_json(capsys, ["eval", "--n", "3", "--p", "0.5", "--q", "4", "--mode", "float"])

        assert record["results"]["coefficients"][0]["coefficient"] == pytest.approx(2.0)

    @pytest.mark.unit
    def test_deterministic(self, capsys):
        """Test repeated runs print identical bytes."""
        argv = ["eval", "--family", "lucas", "--n", "6", "--p", "3/2", "--q", "-2", "--x", "2"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)

        assert capsys.readouterr().out == first

    @pytest.mark.unit
    def test_csv(self, capsys):
        """Test the CSV rows."""
        assert main(["eval", "--n", "3", "--p", "2", "--q", "3", "--format", "csv"]) == 0

        assert capsys.readouterr().out == "n,power,coefficient\n3,0,6\n3,2,1\n"

    @pytest.mark.unit
    def test_large_index(self, capsys):
        """Test F_2100 at p = q = 1 evaluates without running out of stack."""
        record = run_json(capsys, ["eval", "--family", "fib", "--n", "2100", "--p", "1", "--q", "1"])

        coefficients = record["results"]["coefficients"]
        assert record["results"]["degree"] == 2099
        assert coefficients[-1] == {"power": 2099, "coefficient": "1"}
        assert coefficients[0] == {"power": 1, "coefficient": "1050"}

    @pytest.mark.unit
    def test_plain(self, capsys):
        """Test the plain table has a title and header."""
        assert main(["eval", "--n", "3", "--p", "2", "--q", "3", "--x", "1", "--format", "plain"]) == 0
        lines = capsys.readouterr().out.splitlines()

        assert lines[0] == "fibonacci n=3  value=7"
        assert lines[1].split(" | ") == ["n", "power", "coefficient"]
        assert "\033[" not in "\n".join(lines)

    @pytest.mark.unit
    def test_logs_action(self, capsys, quiet_cli):
        """Test the command is written to the audit log."""
        main(["eval", "--n", "2", "--p", "2", "--q", "3"])

        action, inputs, _, success, _ = quiet_cli.call_args[0]
        assert action == "eval"
        assert inputs["n"] == 2
        assert success is True

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "argv",
        [
            ["eval", "--n", "2", "--p", "0.5", "--q", "3"],
            ["eval", "--n", "2", "--p", "1/2", "--q", "3", "--mode", "float"],
            ["eval", "--n", "-1", "--p", "2", "--q", "3"],
            ["eval", "--n", "2", "--p", "0", "--q", "3"],
            ["eval", "--family", "pell", "--n", "2", "--p", "2", "--q", "3"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        """Test bad input exits 2 with a message on stderr."""
        assert main(argv) == 2
        captured = capsys.readouterr()

        assert captured.out == ""
        assert captured.err.startswith("pqfib eval: error:")


class TestNumbersCommand:
    """Tests for pqfib numbers."""

    @pytest.mark.unit
    def test_classical_fibonacci(self, capsys):
        """Test p = q = 1 gives 0, 1, 1, 2, 3, 5, 8 and matches the binomial sums."""
        rows = run_json(capsys, ["numbers", "--n-max", "6", "--p", "1", "--q", "1"])["results"]["values"]

        assert [r["value"] for r in rows] == ["0", "1", "1", "2", "3", "5", "8"]
        assert all(r["match"] for r in rows)

    @pytest.mark.unit
    def test_classical_lucas(self, capsys):
        """Test L_0..L_4 = 1, 1, 3, 4, 7 with no classical entry at n = 0."""
        argv = ["numbers", "--family", "lucas", "--n-max", "4", "--p", "1", "--q", "1"]
        rows = run_json(capsys, argv)["results"]["values"]

        assert [r["value"] for r in rows] == ["1", "1", "3", "4", "7"]
        assert rows[0]["classical"] is None and rows[0]["match"] is None
        assert all(r["match"] for r in rows[1:])

    @pytest.mark.unit
    def test_deformed(self, capsys):
        """Test p=2, q=3 gives 0, 1, 1, 7 without classical columns."""
        rows = run_json(capsys, ["numbers", "--n-max", "3", "--p", "2", "--q", "3"])["results"]["values"]

        assert [r["value"] for r in rows] == ["0", "1", "1", "7"]
        assert "classical" not in rows[0]

    @pytest.mark.unit
    def test_csv(self, capsys):
        """Test the CSV header follows the classical columns."""
        main(["numbers", "--n-max", "2", "--p", "1", "--q", "1", "--format", "csv"])

        assert capsys.readouterr().out.splitlines() == ["n,value,classical,match", "0,0,0,True", "1,1,1,True", "2,1,1,True"]


class TestGenfuncCommand:
    """Tests for pqfib genfunc."""

    @pytest.mark.unit
    def test_classical(self, capsys):
        """Test p = q = 1, x = s = 1 gives the Fibonacci numbers and matches."""
        argv = ["genfunc", "--p", "1", "--q", "1", "--x", "1", "--order", "6"]
        results = run_json(capsys, argv)["results"]

        assert results["definitional"] == ["0", "1", "1", "2", "3", "5", "8"]
        assert results["closed"] == results["definitional"]
        assert results["match"] is True

    @pytest.mark.unit
    def test_lucas_deformed(self, capsys):
        """Test the Lucas closed form matches at p=2, q=3."""
        argv = ["genfunc", "--family", "lucas", "--p", "2", "--q", "3", "--x", "1", "--s=-1/2"]
        record = run_json(capsys, argv)

        assert record["inputs"]["order"] == 12
        assert len(record["results"]["closed"]) == 13
        assert record["results"]["match"] is True

    @pytest.mark.unit
    def test_float_mode(self, capsys):
        """Test float mode compares within the numeric tolerance."""
        argv = ["genfunc", "--p", "1", "--q", "1", "--x", "0.5", "--s", "0.25", "--order", "6", "--mode", "float"]

        assert run_json(capsys, argv)["results"]["match"] is True

    @pytest.mark.unit
    @pytest.mark.parametrize("order", ["65", "-1"])
    def test_order_out_of_range(self, capsys, order):
        """Test an order outside 0..max_order exits 2."""
        assert main(["genfunc", "--p", "1", "--q", "1", "--x", "1", "--order", order]) == 2
        assert "--order" in capsys.readouterr().err


class TestVerifyCommand:
    """Tests for pqfib verify."""

    @staticmethod
    def _report(passed: bool) -> SuiteReport:
        report = SuiteReport(suite="numbers", seed=7, n_max=4)
        report.check("fibonacci_formula", "F_n = ...", "Binet-type sum").record(passed, "n=1")
        return report

    @pytest.mark.unit
    def test_pass(self, capsys, mocker):
        """Test a passing sweep exits 0 and reports each suite."""
        run = mocker.patch("pqfib.cli.run_suites", return_value=[self._report(True)])
        record = run_json(capsys, ["verify", "--suite", "numbers", "--seed", "3", "--n-max", "4"])

        assert record["results"]["passed"] is True
        assert record["results"]["suites"][0]["suite"] == "numbers"
        assert run.call_args.kwargs["seed"] == 3
        assert run.call_args.kwargs["n_max"] == 4

    @pytest.mark.unit
    def test_fail(self, capsys, mocker):
        """Test a failing check exits 1."""
        mocker.patch("pqfib.cli.run_suites", return_value=[self._report(False)])

        assert main(["verify", "--suite", "numbers"]) == 1
        assert json.loads(capsys.readouterr().out)["results"]["passed"] is False

    @pytest.mark.unit
    def test_defaults(self, capsys, mocker):
        """Test seed and n_max default to the configuration."""
        run = mocker.patch("pqfib.cli.run_suites", return_value=[self._report(True)])
        record = run_json(capsys, ["verify"])

        assert record["inputs"] == {"suite": "all", "seed": 7, "n_max": 30}
        assert run.call_args.args == ("all",)

    @pytest.mark.unit
    def test_csv(self, capsys, mocker):
        """Test one CSV row per check."""
        mocker.patch("pqfib.cli.run_suites", return_value=[self._report(True)])
        main(["verify", "--format", "csv"])

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "suite,check,identity,anchor,status,cases,failures"
        assert lines[1] == "numbers,fibonacci_formula,F_n = ...,Binet-type sum,PASS,1,0"

    @pytest.mark.unit
    def test_real_suite(self, capsys):
        """Test a real small suite end to end."""
        record = run_json(capsys, ["verify", "--suite", "numbers", "--n-max", "10"])

        assert record["results"]["passed"] is True
        assert record["results"]["suites"][0]["checks"][0]["cases"] == 10
        assert all(check["anchor"] for check in record["results"]["suites"][0]["checks"])

    @pytest.mark.unit
    def test_logs_resource_usage(self, capsys, quiet_cli):
        """Test the audit entry carries suite time and memory."""
        run_json(capsys, ["verify", "--suite", "numbers", "--n-max", "3"])

        action, _, output, success, _ = quiet_cli.call_args.args
        assert action == "verify"
        assert output["suites"] == ["numbers"]
        assert output["suite_duration_ms"] >= 0
        assert isinstance(output["memory_delta_mb"], (int, float))
        assert success is True


class TestConfigCommand:
    """Tests for pqfib config validate and global options."""

    @pytest.mark.unit
    def test_valid_file(self, capsys, tmp_path):
        """Test a valid file exits 0."""
        path = tmp_path / "pqfib_config.yaml"
        path.write_text("default_order: 8\nmp_dps: 80\n", encoding="utf-8")

        assert main(["config", "validate", "--config", str(path)]) == 0
        assert "Configuration is valid" in capsys.readouterr().out

    @pytest.mark.unit
    def test_invalid_file(self, capsys, tmp_path):
        """Test an invalid value exits 1 and lists the error."""
        path = tmp_path / "pqfib_config.yaml"
        path.write_text("default_order: 0\n", encoding="utf-8")

        assert main(["config", "validate", "--config", str(path)]) == 1
        out = capsys.readouterr().out
        assert "Configuration has errors:" in out
        assert "  - default_order must be >= 1" in out

    @pytest.mark.unit
    def test_missing_file(self, capsys, tmp_path):
        """Test a missing explicit path is an error."""
        assert main(["config", "validate", "--config", str(tmp_path / "absent.yaml")]) == 1
        assert "not found" in capsys.readouterr().out

    @pytest.mark.unit
    def test_version(self, capsys):
        """Test --version prints the version and exits 0."""
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])

        assert excinfo.value.code == 0
        assert __version__ in capsys.readouterr().out

    @pytest.mark.unit
    def test_missing_command(self):
        """Test no subcommand is an argparse usage error."""
        with pytest.raises(SystemExit) as excinfo:
            main([])

        assert excinfo.value.code == 2
