# seqcore/materialize.py
# Exact expansion of sequence specs into rational prefixes.

from fractions import Fraction
from math import factorial
from typing import List

from core.errors import HorizonError, SpecError
from core.logger import get_logger
from seqcore.operators import derivative_weights, hadamard, remainder
from seqcore.schemas import (
    AsweFiniteSpec,
    CoefficientSequence,
    DerivativeSpec,
    ExplicitSpec,
    ExponentialSpec,
    FromQuotientsSpec,
    GeometricSpec,
    HadamardSpec,
    PartialThetaSpec,
    RationalGFSpec,
    RemainderSpec,
    SequenceSpec,
)

logger = get_logger("seqcore")


def materialize(spec: SequenceSpec, horizon: int) -> CoefficientSequence:
    """Exact coefficients a_0..a_horizon of the sequence described by spec."""
    if horizon < 0:
        raise HorizonError(f"Horizon must be nonnegative, got {horizon}")
    coeffs = _expand(spec, horizon)
    return CoefficientSequence(coeffs=coeffs, source=spec)


def _expand(spec: SequenceSpec, horizon: int) -> List[Fraction]:
    if isinstance(spec, ExplicitSpec):
        padded = list(spec.coeffs[: horizon + 1])
        return padded + [Fraction(0)] * (horizon + 1 - len(padded))

    if isinstance(spec, FromQuotientsSpec):
        return _from_quotients(spec, horizon)

    if isinstance(spec, RationalGFSpec):
        series = _polynomial_prefix(spec.numerator, horizon)
        for _ in range(spec.pole_order):
            series = _divide_by_pole(series, spec.beta)
        return series

    if isinstance(spec, AsweFiniteSpec):
        return _aswe_finite(spec, horizon)

    if isinstance(spec, PartialThetaSpec):
        # k(k-1) is even, so a^{k(k-1)} = (a^2)^{k(k-1)/2} stays rational
        return [1 / spec.a_squared ** (k * (k - 1) // 2) for k in range(horizon + 1)]

    if isinstance(spec, ExponentialSpec):
        return [Fraction(1, factorial(k)) for k in range(horizon + 1)]

    if isinstance(spec, GeometricSpec):
        return [spec.c * spec.beta ** k for k in range(horizon + 1)]

    if isinstance(spec, HadamardSpec):
        left = materialize(spec.left, horizon)
        right = materialize(spec.right, horizon)
        return list(hadamard(left, right).coeffs)

    if isinstance(spec, RemainderSpec):
        return list(remainder(materialize(spec.inner, horizon), spec.l).coeffs)

    if isinstance(spec, DerivativeSpec):
        return list(derivative_weights(materialize(spec.inner, horizon)).coeffs)

    raise SpecError(f"Unknown sequence spec {spec!r}")


def _from_quotients(spec: FromQuotientsSpec, horizon: int) -> List[Fraction]:
    available = len(spec.q) + 1
    if horizon > available:
        raise HorizonError(f"Quotients q_2..q_{available} cannot reach horizon {horizon}")
    coeffs = [spec.a0, spec.a1][: horizon + 1]
    for n in range(2, horizon + 1):
        qn = spec.q[n - 2]
        coeffs.append(coeffs[n - 1] ** 2 / (coeffs[n - 2] * qn))
    return coeffs


def _polynomial_prefix(coeffs: List[Fraction], horizon: int) -> List[Fraction]:
    out = [Fraction(0)] * (horizon + 1)
    for k, c in enumerate(coeffs[: horizon + 1]):
        out[k] = Fraction(c)
    return out


def _divide_by_pole(series: List[Fraction], beta: Fraction) -> List[Fraction]:
    """Series of s(z) / (1 - beta z): b_k = s_k + beta b_{k-1}."""
    out: List[Fraction] = []
    prev = Fraction(0)
    for s in series:
        prev = s + beta * prev
        out.append(prev)
    return out


def _multiply_linear(series: List[Fraction], alpha: Fraction) -> List[Fraction]:
    """Series of s(z) (1 + alpha z), truncated to the same horizon."""
    return [s + (alpha * series[k - 1] if k else 0) for k, s in enumerate(series)]


def _aswe_finite(spec: AsweFiniteSpec, horizon: int) -> List[Fraction]:
    series = [Fraction(0)] * (horizon + 1)
    if spec.shift <= horizon:
        series[spec.shift] = spec.c
    for alpha in spec.alphas:
        series = _multiply_linear(series, alpha)
    if spec.gamma:
        logger.debug(f"🔹 exp({spec.gamma} z) truncated at degree {horizon}")
        exp_series = [spec.gamma ** k / factorial(k) for k in range(horizon + 1)]
        series = [
            sum((series[i] * exp_series[k - i] for i in range(k + 1)), Fraction(0))
            for k in range(horizon + 1)
        ]
    for beta in spec.betas:
        series = _divide_by_pole(series, beta)
    return series
