import json

import pytest

from majca.main import main
from majca.verification.suite import CheckResult, ConvergenceStats, VerificationReport


def run_cli(capsysbinary, *argv) -> tuple[int, bytes]:
    code = main(list(argv))
    return code, capsysbinary.readouterr().out


class TestRun:
    def test_pattern_dies_out(self, capsysbinary):
        code, out = run_cli(
            capsysbinary, "run", "--rule", "maj", "-r", "3", "--pattern", "001",
            "--copies", "6", "--steps", "3", "--format", "text",
        )
        assert code == 0
        rows = out.decode().splitlines()
        assert len(rows) == 4
        assert rows[0] == "..#" * 6
        assert all(row == "." * 18 for row in rows[1:])

    def test_json_document(self, capsysbinary):
        code, out = run_cli(capsysbinary, "run", "-r", "2", "--init", "001100110011", "--steps", "2", "--format", "json", "--overlay")
        assert code == 0
        document = json.loads(out)
        assert list(document) == ["command", "message", "error", "result"]
        result = document["result"]
        assert result["states"] == ["001100110011", "110011001100", "001100110011"]
        assert result["labels"] == ["W" * 12] * 3
        assert (result["preperiod"], result["period"]) == (0, 2)

    def test_output_file(self, capsysbinary, tmp_path):
        target = tmp_path / "diagram.svg"
        code, out = run_cli(capsysbinary, "run", "-r", "1", "--init", "0001", "--steps", "2", "--format", "svg", "--output", str(target))
        assert code == 0
        assert out == b""
        written = target.read_bytes()
        _, direct = run_cli(capsysbinary, "run", "-r", "1", "--init", "0001", "--steps", "2", "--format", "svg")
        assert written == direct

    def test_pgm_with_overlay_is_a_usage_error(self, capsysbinary):
        code, out = run_cli(capsysbinary, "run", "-r", "1", "--init", "0001", "--steps", "1", "--format", "pgm", "--overlay")
        assert code == 2
        assert out == b""

    def test_copies_without_pattern(self, capsysbinary):
        code, _ = run_cli(capsysbinary, "run", "-r", "1", "--init", "01", "--copies", "3", "--steps", "1")
        assert code == 2

    def test_bad_characters(self, capsysbinary):
        code, _ = run_cli(capsysbinary, "run", "-r", "1", "--init", "01a1", "--steps", "1")
        assert code == 2

    def test_missing_source(self, capsysbinary):
        code, _ = run_cli(capsysbinary, "run", "-r", "1", "--steps", "1")
        assert code == 2


class TestClassify:
    def test_json(self, capsysbinary):
        code, out = run_cli(capsysbinary, "classify", "-r", "1", "--init", "0001", "--format", "json")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["case"] == "Transient"
        assert result["max_unstable_run"] == 1
        assert result["labels"] == "SSSU"

    def test_text_for_minority(self, capsysbinary):
        code, out = run_cli(capsysbinary, "classify", "--rule", "min", "-r", "1", "--init", "01010101")
        assert code == 0
        lines = out.decode().splitlines()
        assert "temporal_class: FixedPoint" in lines
        assert "case: WeaklyStablePeriodic" in lines
        assert "spatial_period: 2" in lines

    def test_radius_must_be_positive(self, capsysbinary):
        code, _ = run_cli(capsysbinary, "classify", "-r", "0", "--init", "01")
        assert code == 2


class TestEnumerate:
    def test_both_methods_match(self, capsysbinary):
        code, out = run_cli(capsysbinary, "enumerate", "-r", "2", "-n", "12", "--method", "both")
        assert code == 0
        lines = out.decode().splitlines()
        assert lines[-1] == "MATCH"
        split = next(k for k, line in enumerate(lines) if line.startswith("# pattern"))
        brute, pattern = lines[1:split], lines[split + 1 : -1]
        assert brute == pattern == sorted(brute)
        assert lines[0] == f"# brute ({len(brute)})"

    def test_canonical(self, capsysbinary):
        code, out = run_cli(capsysbinary, "enumerate", "-r", "1", "-n", "4", "--canonical")
        assert code == 0
        assert out == b"0000\n0011\n0101\n"

    def test_budget_is_a_usage_error(self, capsysbinary, mocker):
        mocker.patch("majca.enumeration.bruteforce.settings.bruteforce_max_n", 10)
        code, out = run_cli(capsysbinary, "enumerate", "-r", "1", "-n", "11")
        assert code == 2
        assert out == b""


class TestVerify:
    def test_passes(self, capsysbinary):
        code, out = run_cli(capsysbinary, "verify", "-r", "1", "--n-max", "6", "--samples", "20", "--seed", "3", "--trajectory-n", "64")
        assert code == 0
        assert out.decode().splitlines()[-1] == "PASS"

    def test_failure_exit_code(self, capsysbinary, mocker):
        failing = VerificationReport(
            radius=1,
            n_max=4,
            samples=0,
            seed=0,
            trajectory_n=512,
            passed=False,
            checks=[CheckResult(name="theorem", instances=1, violations=1, counterexamples=["0001: made up"])],
            convergence=ConvergenceStats(),
        )
        mocker.patch("majca.commands.verify.run_suite", return_value=failing)
        code, out = run_cli(capsysbinary, "verify", "-r", "1", "--n-max", "4", "--format", "json")
        assert code == 1
        document = json.loads(out)
        assert document["message"] == "Verification failed"
        assert document["result"]["passed"] is False

    def test_seed_must_fit_64_bits(self, capsysbinary):
        code, _ = run_cli(capsysbinary, "verify", "-r", "1", "--n-max", "4", "--seed", str(2**64))
        assert code == 2


@pytest.mark.parametrize("argv", [["--help"], ["run", "--help"]])
def test_help_exits_cleanly(capsysbinary, argv):
    assert main(argv) == 0
