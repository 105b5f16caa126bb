"""Models Package."""

from .models import (
    AnalysisReport,
    CheckReport,
    Counterexample,
    GraphSpec,
    HankelDeterminant,
    HankelDeterminantReport,
    HankelSpec,
    RunConfig,
    ScalingWitness,
    Spectrum,
    TheoremWitness,
    VerificationPlan,
    VerificationSummary,
)


__all__ = [
    "AnalysisReport",
    "CheckReport",
    "Counterexample",
    "GraphSpec",
    "HankelDeterminant",
    "HankelDeterminantReport",
    "HankelSpec",
    "RunConfig",
    "ScalingWitness",
    "Spectrum",
    "TheoremWitness",
    "VerificationPlan",
    "VerificationSummary",
]
