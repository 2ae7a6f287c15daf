"""
analysis.py
------------------------------------
Real-rootedness verdicts built on exact Sturm counting.
------------------------------------
Covers the nonpositive-rootedness report, the derivative numerator of
P(z)/(1 - beta z)^m, the one-pole classifier for TP-infinity generating
functions, the finite multiplier check and the inverse-root power sums.
"""

from fractions import Fraction
from typing import List, Optional, Union

from core.errors import DomainError
from core.logger import get_logger
from realroots.polynomial import Polynomial
from realroots.schemas import (
    PolynomialIn,
    PowerSumReport,
    RootReport,
    RootWitness,
    St1Case,
    TheoremSt1Verdict,
)
from realroots.sturm import cauchy_bound, root_count, squarefree_defect, sturm_count
from seqcore.schemas import AsweFiniteSpec, RationalGFSpec

logger = get_logger("realroots")

St1Input = Union[Polynomial, PolynomialIn, RationalGFSpec, AsweFiniteSpec]


def is_real_rooted_nonpositive(p: Polynomial) -> RootReport:
    """Full root report; counts are taken with multiplicity."""
    if p.is_zero:
        raise DomainError("Root report of the zero polynomial is undefined")
    total = root_count(p)
    nonpositive = root_count(p, None, Fraction(0))
    positive = root_count(p, Fraction(0), None)
    return RootReport(
        degree=p.degree,
        real_root_count_total=total,
        real_root_count_nonpositive=nonpositive,
        real_root_count_positive=positive,
        distinct_real_roots=sturm_count(p),
        squarefree_defect=squarefree_defect(p),
        real_rooted=total == p.degree,
        nonpositive_rooted=nonpositive == p.degree,
    )


def positive_root_witness(p: Polynomial, max_den: int = 1000, tol: Fraction = Fraction(1, 10 ** 12)) -> Optional[RootWitness]:
    """Bracket of the smallest positive root, refined by exact bisection."""
    if p.is_zero:
        raise DomainError("Zero polynomial has no isolated roots")
    hi = cauchy_bound(p)
    if sturm_count(p, Fraction(0), hi) == 0:
        return None
    lo = Fraction(0)
    while hi - lo > tol:
        candidate = ((lo + hi) / 2).limit_denominator(max_den)
        if lo < candidate <= hi and p(candidate) == 0 and sturm_count(p, lo, candidate) == 1:
            return RootWitness(lo=candidate, hi=candidate, exact=candidate)
        mid = (lo + hi) / 2
        if sturm_count(p, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return RootWitness(lo=lo, hi=hi)


def derivative_numerator(gf: RationalGFSpec) -> Polynomial:
    """Q(z) = P'(z)(1 - beta z) + m beta P(z)."""
    if gf.pole_order < 1:
        raise DomainError(f"pole_order must be at least 1, got {gf.pole_order}")
    p = Polynomial(gf.numerator)
    one_minus = Polynomial([1, -gf.beta])
    return p.derivative() * one_minus + p * (gf.pole_order * gf.beta)


def _aswe_to_rational(spec: AsweFiniteSpec) -> Optional[RationalGFSpec]:
    """Single-pole finite ASWE data rewritten as P / (1 - beta z)^m."""
    poles = sorted({b for b in spec.betas if b != 0})
    if spec.gamma != 0 or len(poles) != 1:
        return None
    numerator = Polynomial.from_linear_factors(spec.alphas, spec.c) * Polynomial.monomial(spec.shift)
    return RationalGFSpec(numerator=list(numerator.coeffs), beta=poles[0], pole_order=spec.betas.count(poles[0]))


def _quotient_derivative_numerator(spec: AsweFiniteSpec) -> Polynomial:
    """P'D - PD' for B = P / D with polynomial data (gamma = 0)."""
    p = Polynomial.from_linear_factors(spec.alphas, spec.c) * Polynomial.monomial(spec.shift)
    d = Polynomial.constant(1)
    for beta in spec.betas:
        d = d * Polynomial([1, -beta])
    return p.derivative() * d - p * d.derivative()


def classify_theorem_st1(gf: St1Input) -> TheoremSt1Verdict:
    """Decide whether B' keeps the TP-infinity property for the given form."""
    if isinstance(gf, PolynomialIn):
        gf = gf.to_polynomial()

    if isinstance(gf, Polynomial):
        return _classify_polynomial(gf)

    if isinstance(gf, AsweFiniteSpec):
        converted = _aswe_to_rational(gf)
        if converted is not None:
            return classify_theorem_st1(converted)
        if not any(b != 0 for b in gf.betas):
            if gf.gamma == 0:
                entire = Polynomial.from_linear_factors(gf.alphas, gf.c) * Polynomial.monomial(gf.shift)
                return _classify_polynomial(entire)
            return TheoremSt1Verdict(
                case=St1Case.NOT_APPLICABLE,
                reason="transcendental entire input (gamma > 0) is not decided",
                derivative_preserved=False,
            )
        if gf.gamma != 0:
            return TheoremSt1Verdict(
                case=St1Case.NOT_APPLICABLE,
                reason="exponential factor with poles is outside the polynomial-over-pole form",
                derivative_preserved=False,
            )
        q = _quotient_derivative_numerator(gf)
        return TheoremSt1Verdict(
            case=St1Case.NOT_APPLICABLE,
            reason=f"{len(set(b for b in gf.betas if b))} distinct poles; one pole at most is allowed",
            derivative_numerator=PolynomialIn.from_polynomial(q),
            derivative_preserved=False,
            derivative_numerator_nonpositive_rooted=_nonpositive_rooted(q),
            positive_root_witness=positive_root_witness(q) if not q.is_zero else None,
        )

    return _classify_rational(gf)


def _nonpositive_rooted(p: Polynomial) -> Optional[bool]:
    if p.is_zero:
        return None
    return is_real_rooted_nonpositive(p).nonpositive_rooted


def _classify_polynomial(p: Polynomial) -> TheoremSt1Verdict:
    if any(c < 0 for c in p.coeffs):
        raise DomainError("St1 inputs must have nonnegative coefficients")
    if p.is_zero:
        raise DomainError("Zero generating function")
    report = is_real_rooted_nonpositive(p)
    dp = p.derivative()
    if report.nonpositive_rooted:
        return TheoremSt1Verdict(
            case=St1Case.ENTIRE_LPI,
            reason="polynomial with only real nonpositive zeros",
            derivative_numerator=PolynomialIn.from_polynomial(dp),
            derivative_preserved=True,
            derivative_numerator_nonpositive_rooted=_nonpositive_rooted(dp),
        )
    return TheoremSt1Verdict(
        case=St1Case.NOT_APPLICABLE,
        reason=f"polynomial has {p.degree - report.real_root_count_nonpositive} zeros off the nonpositive axis",
        derivative_numerator=PolynomialIn.from_polynomial(dp),
        derivative_preserved=False,
        derivative_numerator_nonpositive_rooted=_nonpositive_rooted(dp),
    )


def _classify_rational(gf: RationalGFSpec) -> TheoremSt1Verdict:
    p = Polynomial(gf.numerator)
    if any(c < 0 for c in p.coeffs):
        raise DomainError("St1 inputs must have nonnegative coefficients")
    if p.is_zero:
        raise DomainError("Zero numerator")
    q = derivative_numerator(gf)
    q_model = PolynomialIn.from_polynomial(q)
    q_ok = _nonpositive_rooted(q)

    problems: List[str] = []
    if not is_real_rooted_nonpositive(p).nonpositive_rooted:
        problems.append("P has zeros off the nonpositive axis")
    if p.degree > gf.pole_order:
        problems.append(f"deg P = {p.degree} exceeds pole order {gf.pole_order}")

    if problems:
        witness = positive_root_witness(q) if q_ok is False else None
        logger.info(f"❌ St1 not applicable: {'; '.join(problems)}")
        return TheoremSt1Verdict(
            case=St1Case.NOT_APPLICABLE,
            reason="; ".join(problems),
            derivative_numerator=q_model,
            derivative_preserved=False,
            derivative_numerator_nonpositive_rooted=q_ok,
            positive_root_witness=witness,
        )

    if not q_ok:
        # the theorem guarantees this cannot happen; surface it loudly
        logger.error(f"❌ Derivative numerator {q!r} is not nonpositive-rooted for a RationalOK input")
    return TheoremSt1Verdict(
        case=St1Case.RATIONAL_OK,
        reason="nonnegative P with real nonpositive zeros and deg P <= pole order",
        derivative_numerator=q_model,
        derivative_preserved=True,
        derivative_numerator_nonpositive_rooted=q_ok,
    )


def finite_multiplier_check(gammas: List[Fraction]) -> bool:
    """sum gamma_k z^k / k! has only real zeros of one sign (0 fits either)."""
    if not gammas:
        raise DomainError("Multiplier list must be nonempty")
    p = Polynomial.from_exponential_weights(gammas)
    if p.is_zero:
        raise DomainError("All-zero multiplier list")
    if p.degree == 0:
        return True
    at_zero = p.lowest_degree()
    nonpositive = root_count(p, None, Fraction(0))
    nonnegative = root_count(p, Fraction(0), None) + at_zero
    return nonpositive == p.degree or nonnegative == p.degree


def root_power_sum_identities(p: Polynomial) -> PowerSumReport:
    """Inverse-root power sums via Newton identities against closed forms."""
    if p.is_zero:
        raise DomainError("Zero polynomial")
    a0 = p.coeff(0)
    if a0 <= 0:
        raise DomainError(f"Power-sum identities need p(0) > 0, got {a0}")
    if not is_real_rooted_nonpositive(p).nonpositive_rooted:
        raise DomainError("Power-sum identities need a nonpositive-rooted polynomial")

    # p(z)/a0 = prod(1 + y_k z), y_k = 1/x_k, so e_j(y) = a_j / a0
    e = [p.coeff(j) / a0 for j in range(4)]
    sums: List[Fraction] = []
    for j in range(1, 4):
        total = (-1) ** (j - 1) * j * e[j]
        for i in range(1, j):
            total += (-1) ** (i - 1) * e[i] * sums[j - i - 1]
        sums.append(total)

    a1, a2, a3 = p.coeff(1), p.coeff(2), p.coeff(3)
    closed = [
        a1 / a0,
        (a1 ** 2 - 2 * a2 * a0) / a0 ** 2,
        (3 * a3 * a0 ** 2 - 3 * a2 * a1 * a0 + a1 ** 3) / a0 ** 3,
    ]
    return PowerSumReport(sums=sums, closed_forms=closed, residues=[s - c for s, c in zip(sums, closed)])
