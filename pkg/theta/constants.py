"""
constants.py
------------------------------------
Bisection estimators for the three numeric thresholds.
------------------------------------
q_infinity  transition a^2 at which the degree-N truncation of g_a(-x)
            becomes real-rooted, decided by exact Sturm counts
a0_squared  root of the b14 expression for a in (1.8, 1.9), reported as a^2
ll13_root   root of the c2 expression for a in (1.8, 1.95)

Brackets are fixed; a bracket whose ends do not straddle the transition
raises BracketError instead of being widened.
"""

import math
from fractions import Fraction
from typing import Callable, Optional, Tuple

from tqdm import tqdm

from core.errors import BracketError, DomainError
from core.logger import get_logger
from realroots.polynomial import Polynomial
from realroots.sturm import sturm_count
from theta.bounds import b14_rhs, c2_rhs
from theta.certificate import TH3_CONSTANT
from theta.schemas import ConstantName, StabilityReport, ThresholdReport

logger = get_logger("theta")

Q_INFINITY_BRACKET = (Fraction(307, 100), Fraction(17, 5))
A0_BRACKET = (Fraction(9, 5), Fraction(19, 10))
LL13_BRACKET = (Fraction(9, 5), Fraction(39, 20))

REFERENCES = {
    ConstantName.Q_INFINITY: Fraction("3.23363666"),
    ConstantName.A0_SQUARED: Fraction("3.41089186"),
    ConstantName.LL13_ROOT: Fraction("1.87152"),
}


# ==========================================================
# ✅ TRUNCATED PARTIAL THETA
# ==========================================================
def truncation_polynomial(a_squared: Fraction, degree: int) -> Polynomial:
    """sum_{k<=N} (-1)^k x^k / A^{k(k-1)/2} after x = A^s y, s = floor((N-1)/2).

    The substitution keeps the real-rootedness and centres the exponents of A.
    """
    s = (degree - 1) // 2
    return Polynomial([(-1) ** k * a_squared ** (s * k - k * (k - 1) // 2) for k in range(degree + 1)])


def truncation_real_rooted(a_squared: Fraction, degree: int) -> bool:
    return sturm_count(truncation_polynomial(a_squared, degree)) == degree


def tail_guard_bits(a_squared: Fraction, degree: int) -> float:
    """Bits by which the first omitted term sits below the largest kept term.

    Taken at x = A^j for j = 0..N/4, the range where the colliding zeros live.
    """
    log2_a = math.log2(a_squared.numerator) - math.log2(a_squared.denominator)
    n = degree
    worst = math.inf
    for j in range(n // 4 + 1):
        scale = max(k * j - k * (k - 1) // 2 for k in range(n + 1))
        omitted = (n + 1) * j - n * (n + 1) // 2
        worst = min(worst, (scale - omitted) * log2_a)
    return worst


# ==========================================================
# ✅ BISECTION
# ==========================================================
def simplest_between(x: Fraction, y: Fraction) -> Fraction:
    """Rational with the smallest denominator in [x, y]."""
    if x > y:
        raise DomainError(f"Empty interval [{x}, {y}]")
    whole = math.floor(x)
    if whole == x or whole + 1 <= y:
        return Fraction(whole if whole == x else whole + 1)
    return whole + 1 / simplest_between(1 / (y - whole), 1 / (x - whole))


def _split_point(lo: Fraction, hi: Fraction) -> Fraction:
    # within 1/16 of the midpoint, so at most 9/16 of the bracket survives a step
    mid, slack = (lo + hi) / 2, (hi - lo) / 16
    return simplest_between(mid - slack, mid + slack)


def _bisect(predicate: Callable[[Fraction], bool], lo: Fraction, hi: Fraction, width: Callable[[Fraction, Fraction], Fraction],
            tol: Fraction, label: str, progress: bool) -> Tuple[Fraction, Fraction, int]:
    """predicate(lo) is False and predicate(hi) is True on entry and exit.

    Each split is the simplest rational in the middle eighth of the bracket.
    """
    if predicate(lo) or not predicate(hi):
        raise BracketError(f"{label}: bracket [{lo}, {hi}] does not straddle the transition")
    iterations = 0
    # upper bound on the step count
    steps = max(0, math.ceil(math.log(float(width(lo, hi) / tol), 16 / 9))) if width(lo, hi) > tol else 0
    with tqdm(total=steps, desc=label, disable=not progress, leave=False) as bar:
        while width(lo, hi) > tol:
            mid = _split_point(lo, hi)
            if predicate(mid):
                hi = mid
            else:
                lo = mid
            iterations += 1
            bar.update(1)
            logger.debug(f"🔹 {label} split at {mid} [{float(lo):.10f}, {float(hi):.10f}]")
    return lo, hi, iterations


def _plain_width(lo: Fraction, hi: Fraction) -> Fraction:
    return hi - lo


def _squared_width(lo: Fraction, hi: Fraction) -> Fraction:
    return hi * hi - lo * lo


def estimate_constant(name: ConstantName, tol: Fraction, degree: int = 40, precision_bits: int = 128,
                      progress: bool = False) -> ThresholdReport:
    name = ConstantName(name)
    if tol <= 0:
        raise DomainError(f"Tolerance must be positive, got {tol}")
    logger.info(f"🚀 Estimating {name.value} to {tol}")

    if name == ConstantName.Q_INFINITY:
        if degree < 8:
            raise DomainError(f"Truncation degree {degree} is too small")
        lo, hi, iterations = _bisect(
            lambda a2: truncation_real_rooted(a2, degree), *Q_INFINITY_BRACKET,
            width=_plain_width, tol=tol, label="q_infinity", progress=progress,
        )
        guard = min(tail_guard_bits(lo, degree), tail_guard_bits(hi, degree))
        if guard < precision_bits:
            logger.warning(f"⚠️ Tail guard {guard:.1f} bits is below {precision_bits}")
        report = ThresholdReport(
            name=name, bracket=(lo, hi), estimate=(lo + hi) / 2, tolerance=tol, iterations=iterations,
            reference=REFERENCES[name], truncation_degree=degree,
            tail_guard_bits=guard, tail_guard_ok=guard >= precision_bits,
        )

    elif name == ConstantName.A0_SQUARED:
        lo, hi, iterations = _bisect(
            lambda a: b14_rhs(a) > 0, *A0_BRACKET,
            width=_squared_width, tol=tol, label="a0_squared", progress=progress,
        )
        report = ThresholdReport(
            name=name, bracket=(lo * lo, hi * hi), estimate=(lo * lo + hi * hi) / 2, tolerance=tol,
            iterations=iterations, reference=REFERENCES[name], residual=(b14_rhs(lo), b14_rhs(hi)),
        )

    else:
        lo, hi, iterations = _bisect(
            lambda a: c2_rhs(a) > 0, *LL13_BRACKET,
            width=_plain_width, tol=tol, label="ll13_root", progress=progress,
        )
        estimate = (lo + hi) / 2
        report = ThresholdReport(
            name=name, bracket=(lo, hi), estimate=estimate, tolerance=tol, iterations=iterations,
            reference=REFERENCES[name], squared=estimate * estimate, th3_constant=TH3_CONSTANT,
            residual=(c2_rhs(lo), c2_rhs(hi)),
        )

    logger.info(f"✅ {name.value} ≈ {float(report.estimate):.8f} after {iterations} steps")
    return report


def stability_rerun(report: ThresholdReport, degree: int = 60, full: bool = False,
                    progress: bool = False) -> StabilityReport:
    """Recheck a q_infinity bracket at a higher truncation degree.

    By default only the two ends are reclassified; full=True repeats the
    bisection at the new degree and reports how far the estimate moved.
    """
    if report.name != ConstantName.Q_INFINITY:
        raise DomainError(f"Stability reruns apply to q_infinity, not {report.name.value}")
    lo, hi = report.bracket
    lo_ok = truncation_real_rooted(lo, degree)
    hi_ok = truncation_real_rooted(hi, degree)
    rerun: Optional[Fraction] = None
    shift: Optional[Fraction] = None
    if full:
        new_lo, new_hi, _ = _bisect(
            lambda a2: truncation_real_rooted(a2, degree), *Q_INFINITY_BRACKET,
            width=_plain_width, tol=report.tolerance, label=f"q_infinity@{degree}", progress=progress,
        )
        rerun = (new_lo + new_hi) / 2
        shift = abs(rerun - report.estimate)
    agrees = not lo_ok and hi_ok
    if not agrees:
        logger.warning(f"⚠️ Degree {degree} moves the transition out of [{lo}, {hi}]")
    return StabilityReport(
        degree=degree,
        bracket=(lo, hi),
        lo_real_rooted=lo_ok,
        hi_real_rooted=hi_ok,
        agrees=agrees,
        rerun_estimate=rerun,
        estimate_shift=shift,
    )
