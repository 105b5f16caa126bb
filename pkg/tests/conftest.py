from fractions import Fraction
from pathlib import Path

import pytest

from src.arithmetic.polynomial import UPolynomial
from src.config.config import Config
from src.matrices.matrix import ExactMatrix
from src.models.models import VerificationPlan


DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def diag12() -> ExactMatrix:
    return ExactMatrix.diagonal([1, 2])


@pytest.fixture
def diag112() -> ExactMatrix:
    return ExactMatrix.diagonal([1, 1, 2])


@pytest.fixture
def cube_roots_companion() -> ExactMatrix:
    """[[0,0,1],[1,0,0],[0,1,0]]: traces 3, 0, 0, 3, ... so det M_2 = 0."""
    return ExactMatrix.companion(UPolynomial((-1, 0, 0, 1)))


@pytest.fixture
def half_integer_symmetric() -> ExactMatrix:
    return ExactMatrix([[Fraction(1, 2), 1, 0], [1, Fraction(-3, 2), 2], [0, 2, 0]])


@pytest.fixture
def small_plan() -> VerificationPlan:
    return VerificationPlan(
        spectra=8,
        max_distinct=4,
        max_multiplicity=2,
        max_l=2,
        random_matrices=20,
        random_order=4,
        symmetric=8,
        symmetric_order=5,
        minimal=5,
        scaling=8,
        max_counterexamples=2,
    )


@pytest.fixture
def small_verify_config(monkeypatch):
    """Shrinks the default plan the `verify` command builds from Config."""
    for name, value in {
        "VERIFY_SPECTRA": 6,
        "VERIFY_MAX_DISTINCT": 3,
        "VERIFY_MAX_L": 1,
        "VERIFY_RANDOM_MATRICES": 10,
        "VERIFY_RANDOM_ORDER": 4,
        "VERIFY_SYMMETRIC": 5,
        "VERIFY_SYMMETRIC_ORDER": 4,
        "VERIFY_MINIMAL": 3,
        "VERIFY_SCALING": 5,
    }.items():
        monkeypatch.setattr(Config, name, value)
