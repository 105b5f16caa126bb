"""Trace-power Hankel matrices M_{t,l}(G) for TraceHankel project.

[M_{t,l}(G)]_i^j = tr G^{i+j+l-2} for 1 <= i, j <= t. For a spectrum with
distinct eigenvalues λ_1..λ_m and multiplicities p_1..p_m the determinant is

    det M_{t,l} = Σ_{|T|=t} p(T) · λ(T)^l · V(λ_T)²

summed over increasing index subsets T, and vanishes for t > m.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from itertools import combinations

from src.arithmetic.fields import RATIONALS, Field, Scalar
from src.arithmetic.polynomial import UPolynomial
from src.common import logger
from src.common.exceptions import PreconditionError
from src.matrices.matrix import ExactMatrix, determinant, power_traces
from src.models.models import HankelSpec, Spectrum, TheoremWitness


def required_traces(spec: HankelSpec) -> int:
    """Number of traces tr G⁰..tr G^{l+2t-2} a member of the family reads."""
    return spec.l + 2 * spec.t - 1


def build_hankel(traces: Sequence[Scalar], spec: HankelSpec, field: Field = RATIONALS) -> ExactMatrix:
    needed = required_traces(spec)
    if len(traces) < needed:
        raise PreconditionError(
            f"M_{{{spec.t},{spec.l}}} needs traces of powers 0..{needed - 1} ({needed} values), got {len(traces)}",
        )
    # 0-based (i, j) reads power i + j + l
    return ExactMatrix([[traces[i + j + spec.l] for j in range(spec.t)] for i in range(spec.t)], field)


def hankel_det(g: ExactMatrix, spec: HankelSpec) -> Scalar:
    traces = power_traces(g, required_traces(spec) - 1)
    return determinant(build_hankel(traces, spec, g.field))


def hankel_family(
    g: ExactMatrix,
    t_max: int,
    l_values: Iterable[int] = (0,),
) -> list[tuple[int, int, Scalar]]:
    """det M_{t,l}(G) for t = 1..t_max and every l, from one cached trace list."""
    l_values = sorted(set(l_values))
    if t_max < 1 or not l_values:
        return []
    traces = power_traces(g, l_values[-1] + 2 * t_max - 2)
    family = []
    for l in l_values:  # noqa: E741
        for t in range(1, t_max + 1):
            value = determinant(build_hankel(traces, HankelSpec(t=t, l=l), g.field))
            family.append((t, l, value))
    logger.debug("[TraceHankel] computed %d determinants for order %d", len(family), g.order)
    return family


def vandermonde_det(z: Sequence[Scalar], field: Field = RATIONALS) -> Scalar:
    """∏_{i<j} (z_j − z_i), the determinant of V(z_1, …, z_t)."""
    if not z:
        raise PreconditionError("Vandermonde determinant of an empty node list")
    result = field.one
    for i, j in combinations(range(len(z)), 2):
        result *= z[j] - z[i]
    return result


def rhs_closed_form(spectrum: Spectrum, spec: HankelSpec) -> Scalar:
    field = spectrum.field
    if spec.t > spectrum.distinct_count:
        return field.zero
    total = field.zero
    for subset in combinations(range(spectrum.distinct_count), spec.t):
        nodes = [spectrum.eigenvalues[i] for i in subset]
        weight = field.from_int(math.prod(spectrum.multiplicities[i] for i in subset))
        eigen_product = math.prod(nodes, start=field.one)
        total += weight * eigen_product**spec.l * vandermonde_det(nodes, field) ** 2
    return total


def small_spectrum_closed_form(spectrum: Spectrum, spec: HankelSpec) -> Scalar:
    """Hand-evaluated determinants for one or two distinct eigenvalues.

    m = 1: det M_{1,l} = pλ^l, zero for t > 1.
    m = 2: det M_{1,l} = pλ^l + qμ^l, det M_{2,l} = pq(λμ)^l(λ−μ)², zero for t > 2.
    """
    field = spectrum.field
    if spectrum.distinct_count > 2:
        raise PreconditionError("closed forms are only tabulated for at most two distinct eigenvalues")
    if spec.t > spectrum.distinct_count:
        return field.zero
    weights = [field.from_int(p) for p in spectrum.multiplicities]
    if spec.t == 1:
        return sum((w * value**spec.l for w, value in zip(weights, spectrum.eigenvalues)), field.zero)
    (lam, mu), (p, q) = spectrum.eigenvalues, weights
    return p * q * (lam * mu) ** spec.l * (lam - mu) ** 2


def verify_theorem(g: ExactMatrix, spectrum: Spectrum, spec: HankelSpec) -> TheoremWitness:
    if spectrum.order != g.order:
        raise PreconditionError(f"spectrum describes order {spectrum.order}, matrix has order {g.order}")
    if spectrum.field != g.field:
        raise PreconditionError(f"spectrum over {spectrum.field.name}, matrix over {g.field.name}")
    lhs = hankel_det(g, spec)
    rhs = rhs_closed_form(spectrum, spec)
    return TheoremWitness(t=spec.t, l=spec.l, lhs=g.field.format(lhs), rhs=g.field.format(rhs), equal=lhs == rhs)


def realize_spectrum(spectrum: Spectrum) -> ExactMatrix:
    """Block-diagonal diag(λ_1 I_{p_1}, …, λ_m I_{p_m})."""
    field = spectrum.field
    pairs = zip(spectrum.eigenvalues, spectrum.multiplicities)
    return ExactMatrix.block_diagonal([ExactMatrix.identity(p, field).scale(value) for value, p in pairs])


def spectrum_char_poly(spectrum: Spectrum) -> UPolynomial:
    """∏ (λ − λ_i)^{p_i}."""
    roots = [value for value, p in zip(spectrum.eigenvalues, spectrum.multiplicities) for _ in range(p)]
    return UPolynomial.from_roots(roots, spectrum.field)
