"""Configuration for TraceHankel project."""

import os
from typing import Optional

from dotenv import find_dotenv, load_dotenv


# .env is looked up from the working directory, not from the package location
load_dotenv(find_dotenv(usecwd=True))


def int_setting(name: str, default: int) -> Optional[int]:
    """Integer setting from the environment; None when the value is not an integer."""
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return None


class Config:
    """Класс для хранения и валидации конфигурации приложения."""

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    # Field settings
    DEFAULT_FIELD: str = os.getenv("DEFAULT_FIELD", "rational")
    DEFAULT_SEED: Optional[int] = int_setting("DEFAULT_SEED", 0)
    # Verify: constructed spectra
    VERIFY_SPECTRA: Optional[int] = int_setting("VERIFY_SPECTRA", 200)
    VERIFY_MAX_DISTINCT: Optional[int] = int_setting("VERIFY_MAX_DISTINCT", 5)
    VERIFY_MAX_MULTIPLICITY: Optional[int] = int_setting("VERIFY_MAX_MULTIPLICITY", 3)
    VERIFY_EIGENVALUE_BOUND: Optional[int] = int_setting("VERIFY_EIGENVALUE_BOUND", 9)
    VERIFY_MAX_L: Optional[int] = int_setting("VERIFY_MAX_L", 3)
    # Verify: random integer matrices
    VERIFY_RANDOM_MATRICES: Optional[int] = int_setting("VERIFY_RANDOM_MATRICES", 500)
    VERIFY_RANDOM_ORDER: Optional[int] = int_setting("VERIFY_RANDOM_ORDER", 6)
    VERIFY_ENTRY_BOUND: Optional[int] = int_setting("VERIFY_ENTRY_BOUND", 5)
    # Verify: symmetric matrices
    VERIFY_SYMMETRIC: Optional[int] = int_setting("VERIFY_SYMMETRIC", 100)
    VERIFY_SYMMETRIC_ORDER: Optional[int] = int_setting("VERIFY_SYMMETRIC_ORDER", 7)
    VERIFY_MINIMAL: Optional[int] = int_setting("VERIFY_MINIMAL", 50)
    VERIFY_SCALING: Optional[int] = int_setting("VERIFY_SCALING", 50)
    # Report settings
    MAX_COUNTEREXAMPLES: Optional[int] = int_setting("MAX_COUNTEREXAMPLES", 5)

    POSITIVE = (
        "VERIFY_MAX_DISTINCT",
        "VERIFY_MAX_MULTIPLICITY",
        "VERIFY_EIGENVALUE_BOUND",
        "VERIFY_RANDOM_ORDER",
        "VERIFY_ENTRY_BOUND",
        "VERIFY_SYMMETRIC_ORDER",
    )
    NON_NEGATIVE = (
        "VERIFY_SPECTRA",
        "VERIFY_MAX_L",
        "VERIFY_RANDOM_MATRICES",
        "VERIFY_SYMMETRIC",
        "VERIFY_MINIMAL",
        "VERIFY_SCALING",
        "MAX_COUNTEREXAMPLES",
    )

    @classmethod
    def invalid_settings(cls) -> list[str]:
        """Имена настроек с некорректными значениями."""
        invalid = [] if isinstance(cls.DEFAULT_SEED, int) else ["DEFAULT_SEED"]
        for name in cls.POSITIVE:
            value = getattr(cls, name)
            if not isinstance(value, int) or value <= 0:
                invalid.append(name)
        for name in cls.NON_NEGATIVE:
            value = getattr(cls, name)
            if not isinstance(value, int) or value < 0:
                invalid.append(name)
        return invalid

    @classmethod
    def validate(cls) -> bool:
        """Проверяет, что размеры выборок и границы имеют допустимые значения."""
        return not cls.invalid_settings()
