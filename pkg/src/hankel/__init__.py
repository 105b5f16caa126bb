"""Trace-power Hankel family package."""

from .trace_hankel import (
    build_hankel,
    hankel_det,
    hankel_family,
    realize_spectrum,
    required_traces,
    rhs_closed_form,
    small_spectrum_closed_form,
    spectrum_char_poly,
    vandermonde_det,
    verify_theorem,
)


__all__ = [
    "build_hankel",
    "hankel_det",
    "hankel_family",
    "realize_spectrum",
    "required_traces",
    "rhs_closed_form",
    "small_spectrum_closed_form",
    "spectrum_char_poly",
    "vandermonde_det",
    "verify_theorem",
]
