import json

import pytest

from src.analysis.spectral import analyze
from src.analysis.verification import VerificationSuite
from src.arithmetic.fields import PrimeField
from src.cli import ReportFormatter, emit_report, main
from src.matrices.matrix import ExactMatrix
from src.models.models import CheckReport


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_spectral_size(capsys, data_dir):
    assert run(capsys, "spectral-size", str(data_dir / "diag112.txt")) == (0, "2\n")


def test_hankel_det(capsys, data_dir):
    assert run(capsys, "hankel-det", str(data_dir / "diag12.txt"), "-t", "2", "-l", "1") == (0, "2\n")


def test_spectral_poly_on_edgeless_graph(capsys, data_dir):
    assert run(capsys, "spectral-poly", str(data_dir / "edgeless.txt"), "--format", "edges") == (0, "[0, 1]\n")


def test_spectral_poly_on_petersen_graph(capsys, data_dir):
    status, out = run(capsys, "spectral-poly", str(data_dir / "petersen.mtx"), "--format", "mm")
    assert status == 0
    assert out == "[6, -5, -2, 1]\n"


def test_degenerate(capsys, tmp_path):
    path = write(tmp_path, "singular.txt", "2\n0 0\n0 1\n")
    assert run(capsys, "degenerate", path) == (0, "true\n")


def test_prime_field_flag(capsys, data_dir):
    assert run(capsys, "spectral-poly", str(data_dir / "diag112.txt"), "--field", "gf:7") == (0, "[2, 4, 1]\n")


def test_json_report(capsys, data_dir):
    status, out = run(capsys, "spectral-poly", str(data_dir / "diag12.txt"), "--json")
    assert status == 0
    report = json.loads(out)
    assert list(report)[:5] == ["order", "field", "spectral_size", "degenerate", "spectral_polynomial"]
    assert report["order"] == 2
    assert report["spectral_size"] == 2
    assert report["degenerate"] is False
    assert report["spectral_polynomial"] == ["2", "-3", "1"]
    assert report["oracle_agreement"] is True
    assert report["caveat"] is None


def test_json_report_for_zero_matrix(capsys, tmp_path):
    path = write(tmp_path, "zero.txt", "1\n0\n")
    report = json.loads(run(capsys, "degenerate", path, "--json")[1])
    assert report["order"] == 1
    assert report["spectral_size"] == 1
    assert report["degenerate"] is True
    assert report["spectral_polynomial"] == ["0", "1"]


def test_json_report_survives_collapsed_multiplicity(capsys, tmp_path):
    path = write(tmp_path, "collapsed.txt", "4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 1\n")
    assert run(capsys, "spectral-size", path, "--field", "gf:3") == (0, "1\n")
    status, out = run(capsys, "spectral-size", path, "--field", "gf:3", "--json")
    assert status == 0
    report = json.loads(out)
    assert report["spectral_size"] == 1
    assert report["degenerate"] is None
    assert "degeneracy undetermined" in report["caveat"]


def test_json_hankel_report(capsys, data_dir):
    status, out = run(capsys, "hankel-det", str(data_dir / "diag12.txt"), "-t", "2", "--json")
    assert status == 0
    assert json.loads(out) == {"order": 2, "field": "rational", "t": 2, "l": 0, "value": "1"}


def test_output_is_byte_identical_across_runs(capsys, data_dir):
    argv = ("spectral-size", str(data_dir / "petersen.mtx"), "--format", "mm", "--json")
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize(
    ("argv", "text", "exit_code"),
    [
        (("spectral-size",), "2\n1 0\n", 2),
        (("spectral-size", "--format", "edges"), "2\n1 3\n", 3),
        (("spectral-size", "--field", "real"), "1\n1\n", 4),
        (("spectral-size", "--field", "gf:4"), "1\n1\n", 3),
        (("spectral-size", "--format", "mm"), "%%MatrixMarket matrix array real general\n1 1\n1\n", 4),
        (("hankel-det",), "1\n1\n", 3),
        (("hankel-det", "-t", "0"), "1\n1\n", 3),
        (("spectral-size", "--field", "gf:2"), "2\n1 0\n0 1\n", 4),
    ],
)
def test_exit_codes(capsys, tmp_path, argv, text, exit_code):
    path = write(tmp_path, "input.txt", text)
    command, *flags = argv
    status, out = run(capsys, command, path, *flags)
    assert status == exit_code
    assert out == ""


def test_missing_input_path(capsys):
    assert run(capsys, "spectral-size") == (3, "")


def test_tolerance_is_a_usage_error(capsys, data_dir):
    with pytest.raises(SystemExit) as info:
        main(["spectral-size", str(data_dir / "diag12.txt"), "--tolerance", "1e-9"])
    assert info.value.code == 2
    assert "tolerance" in capsys.readouterr().err


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["eigenvalues", "-"])
    assert info.value.code == 2


def test_verify(capsys, small_verify_config):  # noqa: ARG001
    status, out = run(capsys, "verify", "--seed", "3")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "seed 3"
    assert lines[-1] == "PASS"
    assert any(line.startswith("fixtures: 5 samples, 0 failures") for line in lines)


def test_verify_json_is_deterministic(capsys, small_verify_config):  # noqa: ARG001
    first = run(capsys, "verify", "--seed", "4", "--json")
    second = run(capsys, "verify", "--seed", "4", "--json")
    assert first == second
    summary = json.loads(first[1])
    assert summary["seed"] == 4
    assert summary["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(self):  # noqa: ARG001
        report = CheckReport(name="fixtures", samples=1)
        report.failures = 1
        return [report]

    for name in (
        "check_theorem_identity",
        "check_symmetric_positivity",
        "check_random_matrices",
        "check_minimal_polynomial",
        "check_scaling_law",
    ):
        monkeypatch.setattr(VerificationSuite, name, lambda self: [])  # noqa: ARG005
    monkeypatch.setattr(VerificationSuite, "check_fixtures", broken)
    status, out = run(capsys, "verify")
    assert status == 5
    assert out.splitlines()[-1] == "FAIL"


def test_emit_report_is_stable(diag12):
    first, second = emit_report(analyze(diag12)), emit_report(analyze(diag12))
    assert first == second
    assert json.loads(first)["spectral_polynomial"] == ["2", "-3", "1"]


def test_text_rendering_of_undetermined_degeneracy():
    report = analyze(ExactMatrix.diagonal([0, 0, 0, 1], PrimeField(3)))
    assert ReportFormatter().format_analysis("degenerate", report) == "undetermined"
