# seqcore/operators.py
# Termwise operators on materialized prefixes: convolution (Hadamard),
# remainders, derivative weights and the a0 = a1 = 1 normalization.

from fractions import Fraction
from typing import List

from core.errors import DomainError, HorizonError
from realroots.polynomial import Polynomial
from seqcore.schemas import CoefficientSequence, DerivativeSpec, HadamardSpec, RemainderSpec


def hadamard(a: CoefficientSequence, b: CoefficientSequence) -> CoefficientSequence:
    """Coefficient k of the result is a_k * b_k."""
    if a.horizon != b.horizon:
        raise HorizonError(f"Hadamard operands differ in horizon: {a.horizon} vs {b.horizon}")
    source = None
    if a.source is not None and b.source is not None:
        source = HadamardSpec(left=a.source, right=b.source)
    return CoefficientSequence(coeffs=[x * y for x, y in zip(a.coeffs, b.coeffs)], source=source)


def remainder(a: CoefficientSequence, l: int) -> CoefficientSequence:
    """R_l: zero the coefficients below index l, keeping absolute indexing."""
    if l < 0 or l > a.horizon:
        raise HorizonError(f"Remainder index {l} outside 0..{a.horizon}")
    source = RemainderSpec(inner=a.source, l=l) if a.source is not None else None
    coeffs = [Fraction(0)] * l + list(a.coeffs[l:])
    return CoefficientSequence(coeffs=coeffs, source=source)


def derivative_weights(a: CoefficientSequence) -> CoefficientSequence:
    """(k a_k): the coefficients of z f'(z)."""
    source = DerivativeSpec(inner=a.source) if a.source is not None else None
    return CoefficientSequence(coeffs=[k * c for k, c in enumerate(a.coeffs)], source=source)


def normalize(a: CoefficientSequence) -> CoefficientSequence:
    """g(z) = a0^{-1} f(a0 a1^{-1} z), so that g_0 = g_1 = 1."""
    if a.horizon < 1:
        raise HorizonError("Normalization needs a0 and a1")
    a0, a1 = a.coeffs[0], a.coeffs[1]
    if a0 <= 0 or a1 <= 0:
        raise DomainError(f"Normalization needs a0 > 0 and a1 > 0, got a0={a0}, a1={a1}")
    ratio = a0 / a1
    coeffs: List[Fraction] = []
    scale = 1 / a0  # a0^{k-1} / a1^k at k = 0
    for c in a.coeffs:
        coeffs.append(c * scale)
        scale *= ratio
    return CoefficientSequence(coeffs=coeffs)


def shift_down(a: CoefficientSequence, l: int) -> CoefficientSequence:
    """z^{-l} R_l: drop the first l coefficients."""
    if l < 0 or l > a.horizon:
        raise HorizonError(f"Shift {l} outside 0..{a.horizon}")
    return CoefficientSequence(coeffs=list(a.coeffs[l:]))


def as_polynomial(a: CoefficientSequence, degree: int = -1) -> Polynomial:
    """Truncation sum_{k <= degree} a_k z^k (whole prefix by default)."""
    if degree > a.horizon:
        raise HorizonError(f"Truncation degree {degree} exceeds horizon {a.horizon}")
    if degree < 0:
        degree = a.horizon
    return Polynomial(a.coeffs[: degree + 1])


def section(a: CoefficientSequence, lo: int, hi: int) -> Polynomial:
    """sum_{k=lo}^{hi} a_k z^{k-lo}"""
    if not 0 <= lo <= hi <= a.horizon:
        raise HorizonError(f"Section [{lo}, {hi}] outside 0..{a.horizon}")
    return Polynomial(a.coeffs[lo: hi + 1])
