"""Spectral size, degeneracy and spectral polynomial from traces of powers.

Nothing here computes an eigenvalue. The main path reads only
tr G⁰, tr G¹, …; the characteristic-polynomial oracle is a separate path
used to cross-check it.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import comb

from src.arithmetic.fields import RATIONALS, Field, RationalField, Scalar
from src.arithmetic.polynomial import UPolynomial, squarefree_part
from src.common import logger
from src.common.constants import GF_CAVEAT
from src.common.exceptions import (
    InvariantViolationError,
    PreconditionError,
    UnsupportedFieldError,
)
from src.hankel.trace_hankel import build_hankel, hankel_family
from src.matrices.matrix import ExactMatrix, char_poly, determinant, power_traces
from src.matrices.poly_matrix import PolyMatrix, det_poly_matrix
from src.models.models import AnalysisReport, HankelDeterminant, HankelSpec, ScalingWitness


def shifted_power_trace(traces: Sequence[Scalar], k: int, n: int, field: Field = RATIONALS) -> UPolynomial:
    """tr (λI − G)^k = Σ_j C(k, j) (−1)^j tr G^j λ^{k−j}."""
    if k < 0:
        raise PreconditionError(f"power must be non-negative, got {k}")
    if len(traces) <= k:
        raise PreconditionError(f"tr (λI - G)^{k} needs traces of powers 0..{k}, got {len(traces)} values")
    coefficients = [field.zero] * (k + 1)
    for j in range(k + 1):
        trace = field.from_int(n) if j == 0 else traces[j]
        coefficients[k - j] = field.from_int((-1) ** j * comb(k, j)) * trace
    return UPolynomial(tuple(coefficients), field)


class SpectralAnalyzer:
    """Анализ одной матрицы с общим кэшем следов степеней."""

    def __init__(self, g: ExactMatrix):
        self.g = g
        self.field = g.field
        self._traces: list = []
        self._spectral_size = None

    def traces(self, k_max: int) -> list:
        """tr G⁰..tr G^{k_max}; the cache is filled once up to 2n + 1."""
        if len(self._traces) <= k_max:
            self._traces = power_traces(self.g, max(k_max, 2 * self.g.order + 1))
        return self._traces

    def hankel_det(self, spec: HankelSpec) -> Scalar:
        traces = self.traces(spec.l + 2 * spec.t - 2)
        return determinant(build_hankel(traces, spec, self.field))

    def spectral_size(self) -> int:
        """Largest t in 1..n with det M_{t,0}(G) ≠ 0.

        The whole range is scanned: det M_{t,0} can vanish for some t below the
        spectral size (companion matrix of λ³ − 1 at t = 2).
        """
        if self._spectral_size is not None:
            return self._spectral_size
        best = 0
        for t in range(1, self.g.order + 1):
            value = self.hankel_det(HankelSpec(t=t))
            logger.debug("[SpectralAnalysis] det M_%d = %s", t, self.field.format(value))
            if value:
                best = t
        if not best:
            raise UnsupportedFieldError(
                f"every det M_t vanishes over {self.field.name}; the spectral size is not detectable here",
            )
        if self.field.characteristic:
            logger.warning("[SpectralAnalysis] %s: %s", self.field.name, GF_CAVEAT)
        self._spectral_size = best
        return best

    def spectral_size_symmetric(self) -> int:
        """First t with det M_{t+1,0}(G) = 0; for real symmetric G every det M_t up to the spectral size is positive."""
        if not isinstance(self.field, RationalField):
            raise PreconditionError("the symmetric scan needs a rational matrix")
        if not self.g.is_symmetric:
            raise PreconditionError("the symmetric scan needs a symmetric matrix")
        for t in range(1, self.g.order + 1):
            if not self.hankel_det(HankelSpec(t=t + 1)):
                return t
        raise InvariantViolationError(f"det M_{self.g.order + 1} of an order-{self.g.order} matrix is nonzero")

    def spectral_polynomial(self) -> UPolynomial:
        """P_spec(λ) = det M_{m,1}(λI − G) / det M_m(G)."""
        m = self.spectral_size()
        traces = self.traces(2 * m - 1)
        n = self.g.order
        numerator = det_poly_matrix(
            PolyMatrix(
                [[shifted_power_trace(traces, i + j + 1, n, self.field) for j in range(m)] for i in range(m)],
                self.field,
            ),
        )
        denominator = determinant(build_hankel(traces, HankelSpec(t=m), self.field))
        if not denominator:
            raise InvariantViolationError(f"det M_{m} vanished at the detected spectral size {m}")
        result = numerator.scale(self.field.one / denominator)
        if result.degree != m or not result.is_monic:
            raise InvariantViolationError(f"spectral polynomial of degree {result.degree} is not monic of degree {m}")
        return result

    def degeneracy_test(self) -> bool:
        """det M_{m,1}(G) = 0, cross-checked against det G = 0."""
        m = self.spectral_size()
        degenerate = not self.hankel_det(HankelSpec(t=m, l=1))
        singular = not determinant(self.g)
        if degenerate != singular:
            message = f"det M_{{{m},1}} = 0 is {degenerate} but det G = 0 is {singular}"
            if self.field.characteristic:
                raise UnsupportedFieldError(f"{message}: a multiplicity collapsed in {self.field.name}")
            raise InvariantViolationError(message)
        return degenerate

    def oracle_polynomial(self) -> UPolynomial:
        return squarefree_part(char_poly(self.g))

    def oracle_spectral_size(self) -> int:
        return self.oracle_polynomial().degree

    def oracle_applicable(self) -> bool:
        return self.field.supports_division_by(self.g.order)

    def analyze(self) -> AnalysisReport:
        m = self.spectral_size()
        polynomial = self.spectral_polynomial()
        caveat = GF_CAVEAT if self.field.characteristic else None
        try:
            degenerate = self.degeneracy_test()
        except UnsupportedFieldError as e:
            if not self.field.characteristic:
                raise
            logger.warning("[SpectralAnalysis] degeneracy left undetermined: %s", e)
            degenerate = None
            caveat = f"{caveat}; degeneracy undetermined: {e}"
        family = [
            HankelDeterminant(t=t, l=l, value=self.field.format(value))
            for t, l, value in hankel_family(self.g, m + 1, (0, 1))  # noqa: E741
        ]
        agreement = None
        if self.oracle_applicable():
            oracle = self.oracle_polynomial()
            agreement = oracle.degree == m and oracle == polynomial
            if not agreement:
                logger.error("[SpectralAnalysis] oracle disagrees: spectral size %d vs %d", m, oracle.degree)
        return AnalysisReport(
            order=self.g.order,
            field=self.field.name,
            spectral_size=m,
            degenerate=degenerate,
            spectral_polynomial=polynomial.formatted_coefficients(),
            hankel_determinants=family,
            oracle_agreement=agreement,
            caveat=caveat,
        )


def spectral_size(g: ExactMatrix) -> int:
    return SpectralAnalyzer(g).spectral_size()


def spectral_size_symmetric(g: ExactMatrix) -> int:
    return SpectralAnalyzer(g).spectral_size_symmetric()


def spectral_polynomial(g: ExactMatrix) -> UPolynomial:
    return SpectralAnalyzer(g).spectral_polynomial()


def degeneracy_test(g: ExactMatrix) -> bool:
    return SpectralAnalyzer(g).degeneracy_test()


def oracle_spectral_size(g: ExactMatrix) -> int:
    return SpectralAnalyzer(g).oracle_spectral_size()


def analyze(g: ExactMatrix) -> AnalysisReport:
    return SpectralAnalyzer(g).analyze()


def scaling_exponent(spec: HankelSpec) -> int:
    """tl + t(t − 1): each entry of M_{t,l}(cG) gains c^{i+j+l-2}."""
    return spec.t * spec.l + spec.t * (spec.t - 1)


def verify_scaling(g: ExactMatrix, c, spec: HankelSpec) -> ScalingWitness:
    c = g.field.coerce(c)
    if not c:
        raise PreconditionError("scaling factor must be nonzero")
    exponent = scaling_exponent(spec)
    lhs = SpectralAnalyzer(g.scale(c)).hankel_det(spec)
    rhs = c**exponent * SpectralAnalyzer(g).hankel_det(spec)
    return ScalingWitness(
        t=spec.t,
        l=spec.l,
        c=g.field.format(c),
        exponent=exponent,
        lhs=g.field.format(lhs),
        rhs=g.field.format(rhs),
        equal=lhs == rhs,
    )
