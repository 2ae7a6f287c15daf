"""
partial_sum.py
------------------------------------
Partial sums of the partial theta function and their test points.
------------------------------------
S_n^q(x, a) = sum_{k=0}^n (-1)^k x^k / (a^{k(k-1)} q_2^{k-1} q_3^{k-2} ... q_k)

With A = a^2 every coefficient is rational, so S_n^q is evaluated exactly
at rational x.  The points x_0 and x_hat_m are irrational and come back
as mpmath intervals; each one needs a single square root of a rational.
"""

from fractions import Fraction
from typing import List, Optional

from core.errors import DomainError, HorizonError
from quotients.schemas import SecondQuotients
from realroots.polynomial import Polynomial
from realroots.sturm import root_count
from theta.enclosure import Value, certainly_less, enclose, is_exact, lift, sqrt, working_precision
from theta.schemas import S4WindowReport, T4Report

DEFAULT_BITS = 128


def check_a_squared(a_squared: Fraction) -> None:
    if a_squared <= 1:
        raise DomainError(f"a^2 must exceed 1, got {a_squared}")


def x0_domain_ok(a_squared: Fraction) -> bool:
    """a^2 >= 1 + sqrt(5), decided exactly as (a^2 - 1)^2 >= 5."""
    return a_squared >= 1 and (a_squared - 1) ** 2 >= 5


def quotient(q: Optional[SecondQuotients], n: int) -> Fraction:
    if q is None:
        return Fraction(1)
    try:
        return q.at(n)
    except HorizonError as e:
        raise HorizonError(f"Missing quotient q_{n}: {e}") from e


def quotient_product(q: Optional[SecondQuotients], upto: int) -> Fraction:
    """q_2 q_3 ... q_upto (1 for upto < 2)."""
    out = Fraction(1)
    for j in range(2, upto + 1):
        out *= quotient(q, j)
    return out


def partial_theta_coefficients(n: int, a_squared: Fraction, q: Optional[SecondQuotients] = None) -> List[Fraction]:
    """Magnitudes 1 / (A^{k(k-1)/2} q_2^{k-1} ... q_k), k = 0..n."""
    check_a_squared(a_squared)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    coeffs = [Fraction(1)]
    prod = Fraction(1)
    for k in range(1, n + 1):
        if k >= 2:
            prod *= quotient(q, k)
        coeffs.append(coeffs[-1] / (a_squared ** (k - 1) * prod))
    return coeffs


def partial_sum_polynomial(n: int, a_squared: Fraction, q: Optional[SecondQuotients] = None) -> Polynomial:
    coeffs = partial_theta_coefficients(n, a_squared, q)
    return Polynomial([c if k % 2 == 0 else -c for k, c in enumerate(coeffs)])


def eval_partial_sum(n: int, x: Value, a_squared: Fraction, q: Optional[SecondQuotients] = None) -> Value:
    """S_n^q(x, a); exact for rational x, an interval otherwise (q = None means q = 1)."""
    p = partial_sum_polynomial(n, a_squared, q)
    if is_exact(x):
        return p(Fraction(x))
    acc = lift(Fraction(0))
    for c in reversed(p.coeffs):
        acc = acc * x + lift(c)
    return acc


def x0(a_squared: Fraction, bits: int = DEFAULT_BITS):
    """Smallest root of x/a^3 + a^3/x = a^3/2, as 4 / (1 + sqrt(1 - 16/a^6))."""
    check_a_squared(a_squared)
    if not x0_domain_ok(a_squared):
        raise DomainError(f"x_0 needs a^2 >= 1 + sqrt(5), got {a_squared}")
    with working_precision(bits):
        return lift(Fraction(4)) / (1 + sqrt(1 - 16 / a_squared ** 3))


def hat_x(m: int, a_squared: Fraction, q: Optional[SecondQuotients] = None, bits: int = DEFAULT_BITS):
    """a^{2m-3} q_2 ... q_{m-1} sqrt(q_m) = A^{m-2} q_2 ... q_{m-1} sqrt(A q_m)."""
    check_a_squared(a_squared)
    if m < 3:
        raise DomainError(f"hat_x needs m >= 3, got {m}")
    rational = a_squared ** (m - 2) * quotient_product(q, m - 1)
    with working_precision(bits):
        return lift(rational) * sqrt(a_squared * quotient(q, m))


def endpoint(n: int, a_squared: Fraction, q: Optional[SecondQuotients] = None) -> Fraction:
    """a^{2n-2} q_2 ... q_n, always rational."""
    check_a_squared(a_squared)
    return a_squared ** (n - 1) * quotient_product(q, n)


def term_domination(x: Value, a_squared: Fraction, q: Optional[SecondQuotients], n: int) -> List[bool]:
    """For k = 0..n-1: x < A^k q_2 ... q_{k+1}, i.e. term k+1 is smaller than term k."""
    flags: List[bool] = []
    bound = Fraction(1)
    for k in range(n):
        if k >= 1:
            bound *= a_squared * quotient(q, k + 1)
        flags.append(certainly_less(x, bound))
    return flags


def t4_decomposition(x: Value, a_squared: Fraction, q: SecondQuotients, bits: int = DEFAULT_BITS) -> T4Report:
    """T_4^q = (A/x^2)(S_4 - S_4^q) against its D_4 / D_3 / Delta_2 lower bound."""
    check_a_squared(a_squared)
    q2, q3, q4 = quotient(q, 2), quotient(q, 3), quotient(q, 4)
    u = 1 / q2
    v = 1 / (q2 ** 2 * q3)
    w = 1 / (q2 ** 3 * q3 ** 2 * q4)
    d3 = 1 - 2 * u + v
    d4 = 1 - 3 * u + 2 * v + u ** 2 - w
    delta2 = 1 - u
    exact = is_exact(x)
    with working_precision(bits):
        # interval operands do not mix with Fraction
        c = Fraction if exact else lift
        if exact:
            x = Fraction(x)
        xa = x * c(1 / a_squared ** 2)
        xb = x * x * c(1 / a_squared ** 5)
        t4 = c(1 - u) - xa * c(1 - v) + xb * c(1 - w)
        lower = xb * c(d4) + (xa - 2 * xb) * c(d3) + (1 - 2 * xa + 2 * xb) * c(delta2)
        strict = certainly_less(lower, t4)
        return T4Report(t4=enclose(t4), lower_bound=enclose(lower), strict=strict)


def s4_unit_window_roots(a_squared: Fraction) -> S4WindowReport:
    """Exact count of zeros of S_4(x, a) in (1, a^2]."""
    check_a_squared(a_squared)
    count = root_count(partial_sum_polynomial(4, a_squared), Fraction(1), a_squared)
    in_range = x0_domain_ok(a_squared)
    return S4WindowReport(
        a_squared=a_squared,
        roots_in_window=count,
        lemma_range=in_range,
        expected=2 if in_range else None,
    )
