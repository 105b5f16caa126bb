import pytest

from src.analysis.sampling import SampleFactory
from src.analysis.spectral import SpectralAnalyzer
from src.analysis.verification import VerificationSuite
from src.common.exceptions import InvariantViolationError
from src.hankel.trace_hankel import spectrum_char_poly
from src.matrices.matrix import char_poly


CHECK_NAMES = [
    "theorem_identity",
    "vanishing",
    "symmetric_positivity",
    "spectral_size_agreement",
    "spectral_polynomial_agreement",
    "degeneracy",
    "product_of_eigenvalues",
    "minimal_polynomial",
    "scaling_law",
    "fixtures",
]


def test_sample_factory_is_reproducible(small_plan):
    first = SampleFactory(7, "random", small_plan)
    second = SampleFactory(7, "random", small_plan)
    assert [first.integer_matrix(4) for _ in range(5)] == [second.integer_matrix(4) for _ in range(5)]
    other = SampleFactory(8, "random", small_plan)
    assert [other.rational_spectrum() for _ in range(5)] != [first.rational_spectrum() for _ in range(5)]


def test_sampled_spectra_respect_the_plan(small_plan):
    samples = SampleFactory(0, "theorem", small_plan)
    for _ in range(20):
        spectrum = samples.rational_spectrum()
        assert 1 <= spectrum.distinct_count <= small_plan.max_distinct
        assert max(spectrum.multiplicities) <= small_plan.max_multiplicity
        assert all(abs(value) <= small_plan.eigenvalue_bound for value in spectrum.eigenvalues)
        assert all(value.denominator in (1, 2, 3) for value in spectrum.eigenvalues)


def test_conjugated_realization_keeps_the_spectrum(small_plan):
    samples = SampleFactory(3, "theorem", small_plan)
    for _ in range(5):
        spectrum = samples.rational_spectrum()
        g = samples.conjugated_realization(spectrum)
        assert char_poly(g) == spectrum_char_poly(spectrum)


def test_symmetric_samples_are_symmetric(small_plan):
    samples = SampleFactory(1, "symmetric", small_plan)
    for _ in range(10):
        assert samples.symmetric_matrix(small_plan.symmetric_order).is_symmetric


def test_small_run_passes(small_plan):
    summary = VerificationSuite(seed=11, plan=small_plan).run()
    assert summary.passed, summary.model_dump_json(indent=2)
    assert sorted(check.name for check in summary.checks) == sorted(CHECK_NAMES)
    by_name = {check.name: check for check in summary.checks}
    assert by_name["theorem_identity"].samples == small_plan.spectra
    assert by_name["spectral_size_agreement"].samples == small_plan.random_matrices + 1
    assert by_name["fixtures"].samples == 5
    assert all(not check.counterexamples for check in summary.checks)


def test_runs_are_deterministic(small_plan):
    first = VerificationSuite(seed=5, plan=small_plan).run()
    second = VerificationSuite(seed=5, plan=small_plan).run()
    assert first.model_dump_json() == second.model_dump_json()


def test_fixtures_check_alone():
    (report,) = VerificationSuite(seed=0).check_fixtures()
    assert report.passed
    assert report.samples == 5


def test_counterexamples_are_capped(small_plan):
    suite = VerificationSuite(seed=0, plan=small_plan)
    (report,) = suite.check_fixtures()
    for index in range(small_plan.max_counterexamples + 3):
        suite._record(report, {"index": index})  # noqa: SLF001
    assert report.failures == small_plan.max_counterexamples + 3
    assert len(report.counterexamples) == small_plan.max_counterexamples
    assert not report.passed


def test_skipped_product_check_is_not_counted(small_plan, monkeypatch):
    def failing(self):  # noqa: ARG001
        raise InvariantViolationError("spectral polynomial unavailable")

    monkeypatch.setattr(SpectralAnalyzer, "spectral_polynomial", failing)
    size, polynomial, degeneracy, product = VerificationSuite(seed=0, plan=small_plan).check_random_matrices()
    matrices = small_plan.random_matrices + 1
    assert size.samples == degeneracy.samples == polynomial.samples == matrices
    assert polynomial.failures == matrices
    assert degeneracy.passed
    assert product.samples == 0
    assert product.passed


@pytest.mark.slow
def test_default_plan_passes():
    summary = VerificationSuite(seed=0).run()
    assert summary.passed, summary.model_dump_json(indent=2)
