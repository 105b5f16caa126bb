"""Seeded random samples for the verification suite."""

from __future__ import annotations

import random
from fractions import Fraction

from src.hankel.trace_hankel import realize_spectrum
from src.matrices.matrix import ExactMatrix, unimodular_conjugate
from src.models.models import Spectrum, VerificationPlan


class SampleFactory:
    """Генератор случайных спектров и матриц с воспроизводимым зерном."""

    INTEGER_KINDS = ("dense", "sparse", "rank_deficient", "conjugated")
    SYMMETRIC_KINDS = ("dense", "adjacency", "half_integer")

    def __init__(self, seed: int, stream: str, plan: VerificationPlan):
        # str seeds hash through sha512, so every stream is stable across runs
        self.rng = random.Random(f"{seed}:{stream}")
        self.plan = plan

    def rational_spectrum(self) -> Spectrum:
        """m ≤ max_distinct eigenvalues a/b with b in {1, 2, 3} and |a/b| ≤ bound."""
        m = self.rng.randint(1, self.plan.max_distinct)
        bound = self.plan.eigenvalue_bound
        eigenvalues: list[Fraction] = []
        while len(eigenvalues) < m:
            denominator = self.rng.choice((1, 1, 2, 3))
            value = Fraction(self.rng.randint(-bound * denominator, bound * denominator), denominator)
            if value not in eigenvalues:
                eigenvalues.append(value)
        multiplicities = [self.rng.randint(1, self.plan.max_multiplicity) for _ in range(m)]
        return Spectrum(eigenvalues=tuple(eigenvalues), multiplicities=tuple(multiplicities))

    def unimodular_steps(self, order: int, count: int) -> list[tuple[int, int, int]]:
        if order < 2:
            return []
        steps = []
        for _ in range(count):
            i, j = self.rng.sample(range(order), 2)
            steps.append((i, j, self.rng.choice((-1, 1))))
        return steps

    def conjugated_realization(self, spectrum: Spectrum) -> ExactMatrix:
        """Block-diagonal realization hidden by a unimodular similarity."""
        return unimodular_conjugate(
            realize_spectrum(spectrum),
            self.unimodular_steps(spectrum.order, 2 * spectrum.order),
        )

    def integer_matrix(self, max_order: int) -> ExactMatrix:
        n = self.rng.randint(1, max_order)
        bound = self.plan.entry_bound
        kind = self.rng.choice(self.INTEGER_KINDS)
        if kind == "sparse":
            rows = [[self.rng.choice((0, 0, 0, 1)) for _ in range(n)] for _ in range(n)]
        elif kind == "conjugated":
            # repeated integer eigenvalues, few steps keep the entries small
            values = [self.rng.randint(-2, 2) for _ in range(n)]
            return unimodular_conjugate(ExactMatrix.diagonal(values), self.unimodular_steps(n, n - 1))
        else:
            rows = [[self.rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
            if kind == "rank_deficient":
                if n == 1:
                    rows = [[0]]
                else:
                    source, target = self.rng.sample(range(n), 2)
                    rows[target] = list(rows[source])
        return ExactMatrix(rows)

    def symmetric_matrix(self, max_order: int) -> ExactMatrix:
        n = self.rng.randint(1, max_order)
        bound = self.plan.entry_bound
        kind = self.rng.choice(self.SYMMETRIC_KINDS)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                if kind == "adjacency":
                    value = Fraction(self.rng.randint(0, 1)) if i != j else Fraction(0)
                elif kind == "half_integer":
                    value = Fraction(self.rng.randint(-2 * bound, 2 * bound), 2)
                else:
                    value = Fraction(self.rng.randint(-bound, bound))
                rows[i][j] = rows[j][i] = value
        return ExactMatrix(rows)

    def choice(self, values):
        return self.rng.choice(values)

    def randint(self, low: int, high: int) -> int:
        return self.rng.randint(low, high)
