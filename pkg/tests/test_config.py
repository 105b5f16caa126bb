import os
import subprocess
import sys
from pathlib import Path

import pytest

from src.cli import main
from src.config.config import Config, int_setting


ROOT = Path(__file__).resolve().parent.parent


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("12", 12),
        (" 3 ", 3),
        ("abc", None),
        ("1.5", None),
    ],
)
def test_int_setting(monkeypatch, raw, expected):
    monkeypatch.setenv("VERIFY_SPECTRA", raw)
    assert int_setting("VERIFY_SPECTRA", 200) == expected


def test_int_setting_default(monkeypatch):
    monkeypatch.delenv("VERIFY_SPECTRA", raising=False)
    assert int_setting("VERIFY_SPECTRA", 200) == 200


def test_defaults_are_valid():
    assert Config.validate()
    assert Config.invalid_settings() == []


def test_invalid_settings_are_named(monkeypatch):
    monkeypatch.setattr(Config, "VERIFY_SPECTRA", None)
    monkeypatch.setattr(Config, "VERIFY_RANDOM_ORDER", 0)
    monkeypatch.setattr(Config, "MAX_COUNTEREXAMPLES", -1)
    assert Config.invalid_settings() == ["VERIFY_RANDOM_ORDER", "VERIFY_SPECTRA", "MAX_COUNTEREXAMPLES"]
    assert not Config.validate()


def test_malformed_setting_is_a_configuration_error(capsys, monkeypatch, data_dir):
    monkeypatch.setattr(Config, "VERIFY_SPECTRA", None)
    assert main(["spectral-size", str(data_dir / "diag12.txt")]) == 3
    assert capsys.readouterr().out == ""


def test_log_level_from_dotenv_in_working_directory(tmp_path, data_dir):
    (tmp_path / ".env").write_text("LOG_LEVEL=DEBUG\n")
    env = {name: value for name, value in os.environ.items() if name != "LOG_LEVEL"}
    result = subprocess.run(  # noqa: S603
        [sys.executable, str(ROOT / "main.py"), "spectral-size", str(data_dir / "diag12.txt")],
        cwd=tmp_path,
        env=env,
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout == "2\n"
    assert "DEBUG" in result.stderr
    assert "det M_1 = 2" in result.stderr
