"""Spectral analysis package."""

from .spectral import (
    SpectralAnalyzer,
    analyze,
    degeneracy_test,
    oracle_spectral_size,
    scaling_exponent,
    shifted_power_trace,
    spectral_polynomial,
    spectral_size,
    spectral_size_symmetric,
    verify_scaling,
)


__all__ = [
    "SpectralAnalyzer",
    "analyze",
    "degeneracy_test",
    "oracle_spectral_size",
    "scaling_exponent",
    "shifted_power_trace",
    "spectral_polynomial",
    "spectral_size",
    "spectral_size_symmetric",
    "verify_scaling",
]
