# theta/bounds.py
# Numeric diagnostics for the bounds behind the sign-alternation certificate.
# Nothing here is fatal: each bound carries its own domain flag.

from fractions import Fraction
from typing import List, Tuple

from core.logger import get_logger
from theta.enclosure import Value, enclose, exact_or_none, is_exact, lift, sign_of, sqrt, working_precision
from theta.partial_sum import DEFAULT_BITS, check_a_squared, x0, x0_domain_ok
from theta.schemas import BoundsReport, BoundValue, ProductBound

logger = get_logger("theta")


def a_b8(a_squared: Fraction) -> Fraction:
    """A = 8(a^2 - 2) / a^4."""
    return 8 * (a_squared - 2) / a_squared ** 2


def _bound(name: str, value: Value, in_domain: bool = True, note: str = "") -> BoundValue:
    sign = sign_of(value)
    return BoundValue(
        name=name,
        value=enclose(value),
        exact=exact_or_none(value),
        positive=None if sign is None else sign > 0,
        in_domain=in_domain,
        note=note,
    )


def l6_rhs(a_squared: Fraction, q_prev: Fraction, q_m: Fraction, q_next: Fraction):
    """1 - 2/(a sqrt q_m) + s/(a^4 q_m) - s^2/(a^9 q_m^{3/2}), s = 1/q_{m+1} + 1/q_{m-1}."""
    s = 1 / q_next + 1 / q_prev
    r = sqrt(a_squared * q_m)  # a sqrt(q_m)
    return 1 - 2 / r + lift(s / (a_squared ** 2 * q_m)) - lift(s ** 2 / (a_squared ** 4 * q_m)) / r


def l10_rhs(a_squared: Fraction, q_prev: Fraction, q_n: Fraction):
    """1 - 2/(a sqrt q_n) + 1/(a^4 q_n q_{n-1}) - 1/(a^9 q_n^{3/2} q_{n-1}^2)."""
    r = sqrt(a_squared * q_n)
    return 1 - 2 / r + lift(1 / (a_squared ** 2 * q_n * q_prev)) - lift(1 / (a_squared ** 4 * q_n * q_prev ** 2)) / r


def c1_rhs(a_squared: Fraction, q_prev: Fraction):
    """1 - 2/a + 1/(a^4 q_{n-1}) - 1/(a^9 q_{n-1}^2)."""
    a = sqrt(a_squared)
    return 1 - 2 / a + lift(1 / (a_squared ** 2 * q_prev)) - lift(1 / (a_squared ** 4 * q_prev ** 2)) / a


def _odd_even_poly(a: Value, terms: List[Tuple[int, Fraction]]) -> Value:
    """sum c / a^k with a given exactly or as an interval."""
    total = Fraction(0) if is_exact(a) else lift(Fraction(0))
    for k, c in terms:
        term = c / a ** k if is_exact(a) else lift(c) / a ** k
        total = total + term
    return total


B14_TERMS = [(0, Fraction(1)), (1, Fraction(-2)), (6, Fraction(8)), (8, Fraction(-16)),
             (13, Fraction(-8)), (15, Fraction(32)), (17, Fraction(-32))]
C2_TERMS = [(0, Fraction(1)), (1, Fraction(-2)), (2, Fraction(1, 4)), (5, Fraction(-1, 16))]


def b14_rhs(a: Value) -> Value:
    """1 - 2/a + 8/a^6 - 16/a^8 - 8/a^13 + 32/a^15 - 32/a^17"""
    return _odd_even_poly(a, B14_TERMS)


def c2_rhs(a: Value) -> Value:
    """1 - 2/a + 1/(4a^2) - 1/(16a^5)"""
    return _odd_even_poly(a, C2_TERMS)


def lemma_bounds_report(a_squared: Fraction, q_triple: Tuple[Fraction, Fraction, Fraction],
                        m_label: str = "m", bits: int = DEFAULT_BITS) -> BoundsReport:
    check_a_squared(a_squared)
    q_prev, q_m, q_next = (Fraction(v) for v in q_triple)
    big_a = a_b8(a_squared)
    mid_range = 3 < a_squared < 4
    small_q = 1 <= q_m < 4 / a_squared
    mu = 1 / q_next + 1 / q_prev

    bounds: List[BoundValue] = []
    with working_precision(bits):
        a = sqrt(a_squared)
        bounds.append(_bound("L6", l6_rhs(a_squared, q_prev, q_m, q_next), in_domain=q_m >= 1))
        bounds.append(_bound("b4", l6_rhs(a_squared, q_prev, Fraction(1), q_next), in_domain=a_squared < 4,
                             note="L6 with q_m = 1"))
        bounds.append(_bound("b14", b14_rhs(a), in_domain=mid_range))
        bounds.append(_bound("L10", l10_rhs(a_squared, q_prev, q_m), in_domain=q_m >= 1,
                             note=f"q_n = q_{m_label}, q_(n-1) = q_({m_label}-1)"))
        bounds.append(_bound("c1", c1_rhs(a_squared, q_prev), in_domain=mid_range))
        bounds.append(_bound("c2", c2_rhs(a), in_domain=mid_range))
        if x0_domain_ok(a_squared):
            x = x0(a_squared, bits)
            e1 = x * lift(1 / a_squared ** 2) - 2 * x * x * lift(1 / a_squared ** 5)
            e2 = 1 - 2 * x * lift(1 / a_squared ** 2) + 2 * x * x * lift(1 / a_squared ** 5)
            bounds.append(_bound("e1", e1))
            bounds.append(_bound("e2", e2))
        else:
            note = "x_0 undefined below a^2 = 1 + sqrt(5)"
            bounds.append(BoundValue(name="e1", in_domain=False, note=note))
            bounds.append(BoundValue(name="e2", in_domain=False, note=note))

    lhs = (q_prev - 1 / big_a) * (q_next - 1 / big_a) if big_a != 0 else Fraction(0)
    rhs = (1 - big_a) / big_a ** 2 if big_a != 0 else Fraction(0)
    negative = [b.name for b in bounds if b.in_domain and b.positive is False]
    if negative:
        logger.info(f"⚠️ Bounds not positive at a^2={a_squared}: {', '.join(negative)}")

    return BoundsReport(
        a_squared=a_squared,
        m_label=m_label,
        q_triple=(q_prev, q_m, q_next),
        a_b8=big_a,
        three_below_a2_below_four=mid_range,
        q_m_small=small_q,
        bounds=bounds,
        b7=ProductBound(lhs=lhs, rhs=rhs, holds=big_a != 0 and lhs <= rhs),
        mu=mu,
        mu_at_least_a_b8=mu >= big_a,
    )
