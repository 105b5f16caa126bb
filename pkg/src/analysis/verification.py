"""Randomized verification suite for TraceHankel project.

Every check compares two exact values; there is no tolerance anywhere.
"""

from __future__ import annotations

from collections.abc import Callable

from src.analysis.sampling import SampleFactory
from src.analysis.spectral import SpectralAnalyzer, verify_scaling
from src.arithmetic.polynomial import UPolynomial
from src.common import logger
from src.common.exceptions import TraceHankelError
from src.hankel.trace_hankel import build_hankel, rhs_closed_form
from src.matrices.matrix import ExactMatrix, determinant, evaluate_polynomial_at, power_traces
from src.models.models import (
    CheckReport,
    Counterexample,
    GraphSpec,
    HankelSpec,
    VerificationPlan,
    VerificationSummary,
)
from src.parsers.graph import adjacency_matrix


PETERSEN_EDGES = (
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
)  # fmt: skip


def _matrix_detail(g: ExactMatrix) -> dict:
    return {"order": g.order, "matrix": g.formatted_rows()}


class VerificationSuite:
    """Набор проверок тождеств на случайных и фиксированных примерах."""

    def __init__(self, seed: int, plan: VerificationPlan | None = None):
        self.seed = seed
        self.plan = plan or VerificationPlan()

    def _samples(self, stream: str) -> SampleFactory:
        return SampleFactory(self.seed, stream, self.plan)

    def _record(self, report: CheckReport, detail: dict) -> None:
        report.failures += 1
        if len(report.counterexamples) < self.plan.max_counterexamples:
            report.counterexamples.append(Counterexample(check=report.name, detail=detail))

    def run(self) -> VerificationSummary:
        checks: list[Callable[[], list[CheckReport]]] = [
            self.check_theorem_identity,
            self.check_symmetric_positivity,
            self.check_random_matrices,
            self.check_minimal_polynomial,
            self.check_scaling_law,
            self.check_fixtures,
        ]
        reports: list[CheckReport] = []
        for check in checks:
            logger.info("[Verification] running %s", check.__name__)
            produced = check()
            for report in produced:
                logger.info(
                    "[Verification] %s: %d samples, %d failures",
                    report.name,
                    report.samples,
                    report.failures,
                )
            reports.extend(produced)
        return VerificationSummary(
            seed=self.seed,
            passed=all(report.passed for report in reports),
            checks=reports,
        )

    def check_theorem_identity(self) -> list[CheckReport]:
        """hankel_det = rhs_closed_form for t ≤ m+2, l ≤ max_l; zero for t > m."""
        identity = CheckReport(name="theorem_identity")
        vanishing = CheckReport(name="vanishing")
        samples = self._samples("theorem")
        for _ in range(self.plan.spectra):
            spectrum = samples.rational_spectrum()
            g = samples.conjugated_realization(spectrum)
            m = spectrum.distinct_count
            traces = power_traces(g, self.plan.max_l + 2 * (m + 2) - 2)
            identity.samples += 1
            vanishing.samples += 1
            mismatches, nonzero = [], []
            for t in range(1, m + 3):
                for l in range(self.plan.max_l + 1):  # noqa: E741
                    spec = HankelSpec(t=t, l=l)
                    lhs = determinant(build_hankel(traces, spec))
                    rhs = rhs_closed_form(spectrum, spec)
                    if lhs != rhs:
                        mismatches.append({"t": t, "l": l, "lhs": str(lhs), "rhs": str(rhs)})
                    if t > m and lhs:
                        nonzero.append({"t": t, "l": l, "value": str(lhs)})
            spectrum_detail = {
                "eigenvalues": [str(v) for v in spectrum.eigenvalues],
                "multiplicities": list(spectrum.multiplicities),
            }
            if mismatches:
                self._record(identity, {**spectrum_detail, **_matrix_detail(g), "mismatches": mismatches})
            if nonzero:
                self._record(vanishing, {**spectrum_detail, **_matrix_detail(g), "nonzero": nonzero})
        return [identity, vanishing]

    def check_symmetric_positivity(self) -> list[CheckReport]:
        """det M_t > 0 up to the oracle's spectral size, zero just beyond it."""
        report = CheckReport(name="symmetric_positivity")
        samples = self._samples("symmetric")
        for _ in range(self.plan.symmetric):
            g = samples.symmetric_matrix(self.plan.symmetric_order)
            analyzer = SpectralAnalyzer(g)
            m = analyzer.oracle_spectral_size()
            values = {t: analyzer.hankel_det(HankelSpec(t=t)) for t in range(1, m + 3)}
            report.samples += 1
            positive = all(values[t] > 0 for t in range(1, m + 1))
            vanishing = not values[m + 1] and not values[m + 2]
            early_exit = analyzer.spectral_size_symmetric() == m
            if not (positive and vanishing and early_exit):
                self._record(
                    report,
                    {
                        **_matrix_detail(g),
                        "oracle_spectral_size": m,
                        "determinants": {str(t): str(v) for t, v in values.items()},
                    },
                )
        return [report]

    def check_random_matrices(self) -> list[CheckReport]:
        """Trace path against the characteristic-polynomial oracle on random integer matrices."""
        size = CheckReport(name="spectral_size_agreement")
        polynomial = CheckReport(name="spectral_polynomial_agreement")
        degeneracy = CheckReport(name="degeneracy")
        product = CheckReport(name="product_of_eigenvalues")
        samples = self._samples("random")
        companion = ExactMatrix.companion(UPolynomial((-1, 0, 0, 1)))
        matrices = [companion] + [
            samples.integer_matrix(self.plan.random_order) for _ in range(self.plan.random_matrices)
        ]
        for g in matrices:
            analyzer = SpectralAnalyzer(g)
            m = analyzer.spectral_size()
            oracle = analyzer.oracle_polynomial()
            for report in (size, polynomial, degeneracy):
                report.samples += 1
            if m != oracle.degree:
                self._record(size, {**_matrix_detail(g), "spectral_size": m, "oracle": oracle.degree})
            try:
                degenerate = analyzer.degeneracy_test()
                if degenerate != (not determinant(g)):
                    self._record(degeneracy, {**_matrix_detail(g), "degenerate": degenerate})
            except TraceHankelError as e:
                self._record(degeneracy, {**_matrix_detail(g), "error": str(e)})
            try:
                spectral = analyzer.spectral_polynomial()
            except TraceHankelError as e:
                self._record(polynomial, {**_matrix_detail(g), "error": str(e)})
                continue
            if spectral != oracle:
                self._record(
                    polynomial,
                    {
                        **_matrix_detail(g),
                        "spectral_polynomial": spectral.formatted_coefficients(),
                        "oracle": oracle.formatted_coefficients(),
                    },
                )
            product.samples += 1
            eigen_product = (-1) ** m * spectral.coefficient(0)
            base = analyzer.hankel_det(HankelSpec(t=m))
            broken = [
                l
                for l in range(self.plan.max_l + 1)  # noqa: E741
                if analyzer.hankel_det(HankelSpec(t=m, l=l)) != eigen_product**l * base
            ]
            if broken:
                self._record(product, {**_matrix_detail(g), "failing_l": broken})
        return [size, polynomial, degeneracy, product]

    def check_minimal_polynomial(self) -> list[CheckReport]:
        """P_spec(G) = 0 for rational symmetric G."""
        report = CheckReport(name="minimal_polynomial")
        samples = self._samples("minimal")
        for _ in range(self.plan.minimal):
            g = samples.symmetric_matrix(min(6, self.plan.symmetric_order))
            spectral = SpectralAnalyzer(g).spectral_polynomial()
            report.samples += 1
            if not evaluate_polynomial_at(spectral, g).is_zero:
                self._record(
                    report,
                    {**_matrix_detail(g), "spectral_polynomial": spectral.formatted_coefficients()},
                )
        return [report]

    def check_scaling_law(self) -> list[CheckReport]:
        """det M_{t,l}(cG) = c^{tl+t(t-1)} det M_{t,l}(G)."""
        report = CheckReport(name="scaling_law")
        samples = self._samples("scaling")
        for _ in range(self.plan.scaling):
            g = samples.integer_matrix(min(5, self.plan.random_order))
            c = samples.choice((-2, 2, 3))
            spec = HankelSpec(t=samples.randint(1, g.order), l=samples.randint(0, self.plan.max_l))
            witness = verify_scaling(g, c, spec)
            report.samples += 1
            if not witness.equal:
                self._record(report, {**_matrix_detail(g), **witness.model_dump()})
        return [report]

    def check_fixtures(self) -> list[CheckReport]:
        report = CheckReport(name="fixtures")
        for name, check in self._fixtures():
            report.samples += 1
            try:
                ok, detail = check()
            except TraceHankelError as e:
                ok, detail = False, {"error": str(e)}
            if not ok:
                self._record(report, {"fixture": name, **detail})
        return [report]

    def _fixtures(self) -> list[tuple[str, Callable[[], tuple[bool, dict]]]]:
        def companion_of_cube_roots() -> tuple[bool, dict]:
            analyzer = SpectralAnalyzer(ExactMatrix.companion(UPolynomial((-1, 0, 0, 1))))
            m = analyzer.spectral_size()
            gap = analyzer.hankel_det(HankelSpec(t=2))
            return m == 3 and not gap and analyzer.oracle_spectral_size() == 3, {
                "spectral_size": m,
                "det_M2": str(gap),
            }

        def repeated_eigenvalue() -> tuple[bool, dict]:
            spectral = SpectralAnalyzer(ExactMatrix.diagonal([1, 1, 2])).spectral_polynomial()
            return spectral == UPolynomial((2, -3, 1)), {"spectral_polynomial": spectral.formatted_coefficients()}

        def two_eigenvalue_closed_forms() -> tuple[bool, dict]:
            first = SpectralAnalyzer(ExactMatrix.diagonal([1, 2])).hankel_det(HankelSpec(t=2, l=1))
            second = SpectralAnalyzer(ExactMatrix.diagonal([3, 3, 5])).hankel_det(HankelSpec(t=2))
            return first == 2 and second == 8, {"diag(1,2) t=2 l=1": str(first), "diag(3,3,5) t=2 l=0": str(second)}

        def scaling_exponent_witness() -> tuple[bool, dict]:
            witness = verify_scaling(ExactMatrix.diagonal([1, 2]), 2, HankelSpec(t=1, l=1))
            # the exponent ml + t(t-1) with m = 2 would predict 2² · 3 = 12
            return witness.equal and witness.lhs == "6" and witness.exponent == 1, witness.model_dump()

        def petersen_graph() -> tuple[bool, dict]:
            analyzer = SpectralAnalyzer(adjacency_matrix(GraphSpec(vertex_count=10, edges=PETERSEN_EDGES)))
            spectral = analyzer.spectral_polynomial()
            expected = UPolynomial.from_roots((3, 1, -2))
            return (
                analyzer.spectral_size() == 3 and spectral == expected and analyzer.oracle_polynomial() == expected,
                {"spectral_polynomial": spectral.formatted_coefficients()},
            )

        return [
            ("companion of λ³−1", companion_of_cube_roots),
            ("diag(1,1,2)", repeated_eigenvalue),
            ("two-eigenvalue closed forms", two_eigenvalue_closed_forms),
            ("scaling exponent", scaling_exponent_witness),
            ("petersen graph", petersen_graph),
        ]
