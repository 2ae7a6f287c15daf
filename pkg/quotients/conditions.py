"""
conditions.py
------------------------------------
Second quotients and the conditions stated in terms of them.
------------------------------------
Hutchinson's sufficient condition (every q_n >= 4), the shiftwise necessary
chain q_{l+3}(q_{l+2} - 4) + 3 >= 0, the principal-minor inequalities for a
normalized sequence and the remainder audit, which only ever reports finite
evidence ("supported at degree d").
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional

from core.errors import DomainError, HorizonError
from core.logger import get_logger
from realroots.analysis import is_real_rooted_nonpositive
from seqcore.materialize import materialize
from seqcore.operators import as_polynomial, section, shift_down
from seqcore.schemas import CoefficientSequence, SequenceSpec
from quotients.schemas import (
    DReport,
    Lemma4Matrices,
    MonotoneTailReport,
    NecessaryReport,
    RemainderCheck,
    SecondQuotients,
    SectionsReport,
    Th1AuditReport,
)

logger = get_logger("quotients")

Q_INFINITY_REFERENCE = Fraction("3.23363666")


def second_quotients(seq: CoefficientSequence, n_max: int) -> SecondQuotients:
    """q_n = a_{n-1}^2 / (a_{n-2} a_n) for n = 2..n_max."""
    if n_max < 2:
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    if n_max > seq.horizon:
        raise HorizonError(f"n_max {n_max} exceeds horizon {seq.horizon}")
    for k in range(n_max + 1):
        if seq.coeffs[k] <= 0:
            raise DomainError(f"Second quotients need a_k > 0, got a_{k} = {seq.coeffs[k]}")
    a = seq.coeffs
    return SecondQuotients(q=[a[n - 1] ** 2 / (a[n - 2] * a[n]) for n in range(2, n_max + 1)])


def hutchinson_holds(q: SecondQuotients) -> bool:
    return all(qn >= 4 for qn in q.q)


def normalized_coefficients(q: SecondQuotients, upto: int) -> List[Fraction]:
    """1, 1, 1/q_2, 1/(q_2^2 q_3), ... up to index upto."""
    if upto > q.n_max:
        raise HorizonError(f"Coefficient a_{upto} needs q_{upto}, only q_2..q_{q.n_max} given")
    coeffs = [Fraction(1), Fraction(1)]
    for n in range(2, upto + 1):
        coeffs.append(coeffs[n - 1] ** 2 / (coeffs[n - 2] * q.at(n)))
    return coeffs[: upto + 1]


def lemma1_chain(q: SecondQuotients) -> NecessaryReport:
    """v_l = q_{l+3}(q_{l+2} - 4) + 3 for every representable l >= 0."""
    if len(q.q) < 2:
        raise DomainError(f"The chain needs q_2 and q_3, got {len(q.q)} quotient(s)")
    values = [q.at(l + 3) * (q.at(l + 2) - 4) + 3 for l in range(q.n_max - 2)]
    first = next((l for l, v in enumerate(values) if v < 0), None)

    chain_holds = all(
        q.at(j + 1) <= q.at(j)
        for j in range(2, q.n_max)
        if q.at(j) <= 3
    )
    a0, a1, a2, a3 = normalized_coefficients(q, 3)
    last = q.q[-1]
    if first is not None:
        logger.info(f"❌ Necessary chain violated at l={first}: {values[first]}")
    return NecessaryReport(
        values=values,
        first_violation=first,
        q2_at_least_2=q.at(2) >= 2,
        coefficient_form=a1 ** 2 * a2 - 4 * a0 * a2 ** 2 + 3 * a0 * a1 * a3,
        chain_holds=chain_holds,
        limit_value=last * (last - 4) + 3,
    )


def _delta3(q: SecondQuotients, k: int) -> Fraction:
    prev, cur, nxt = q.at(k - 1), q.at(k), q.at(k + 1)
    return 1 - 2 / cur + (1 / cur ** 2) * (1 / prev + 1 / nxt) - 1 / (prev * cur ** 2 * nxt)


def d_inequalities(q: SecondQuotients) -> DReport:
    if len(q.q) < 2:
        raise DomainError("D_3 needs q_2 and q_3")
    q2, q3 = q.at(2), q.at(3)
    delta2 = [1 - 1 / qk for qk in q.q]
    d3 = 1 - 2 / q2 + 1 / (q2 ** 2 * q3)
    d4: Optional[Fraction] = None
    if q.n_max >= 4:
        q4 = q.at(4)
        d4 = 1 - 3 / q2 + 2 / (q2 ** 2 * q3) + 1 / q2 ** 2 - 1 / (q2 ** 3 * q3 ** 2 * q4)
    # k = 2 reaches q_1, taken as 1
    delta3 = [_delta3(q, k) for k in range(2, q.n_max)]
    return DReport(
        delta2=delta2,
        d3=d3,
        d4=d4,
        delta3=delta3,
        uses_q1_convention=bool(delta3),
        delta2_nonnegative=all(v >= 0 for v in delta2),
        d3_nonnegative=d3 >= 0,
        d4_nonnegative=None if d4 is None else d4 >= 0,
        delta3_nonnegative=all(v >= 0 for v in delta3),
    )


def lemma4_matrices(q: SecondQuotients, k: int) -> Lemma4Matrices:
    """4x4 leading Toeplitz block of the normalized sequence and the 3x3 matrix with det = Delta_3^k / q_{k-1}."""
    if q.n_max < 4:
        raise DomainError("The leading 4x4 block needs q_2..q_4")
    if not 2 <= k < q.n_max:
        raise HorizonError(f"k={k} needs q_{k - 1}..q_{k + 1}, available q_2..q_{q.n_max}")
    a = normalized_coefficients(q, 4)
    leading = [[a[j - i + 1] if j - i + 1 >= 0 else Fraction(0) for j in range(4)] for i in range(4)]
    prev, cur, nxt = q.at(k - 1), q.at(k), q.at(k + 1)
    normalized = [
        [Fraction(1), 1 / (prev * cur), 1 / (prev * cur ** 2 * nxt)],
        [Fraction(1), 1 / prev, 1 / (prev * cur)],
        [Fraction(1), Fraction(1), Fraction(1)],
    ]
    return Lemma4Matrices(k=k, leading=leading, normalized=normalized, uses_q1_convention=k == 2)


# ==========================================================
# ✅ AUDITS
# ==========================================================
def _check_remainder(seq: CoefficientSequence, l: int, trunc_degree: int) -> RemainderCheck:
    p = as_polynomial(shift_down(seq, l), trunc_degree)
    report = is_real_rooted_nonpositive(p)
    return RemainderCheck(
        l=l,
        degree=p.degree,
        nonpositive_rooted=report.nonpositive_rooted,
        real_root_count_nonpositive=report.real_root_count_nonpositive,
    )


def th1_audit(spec: SequenceSpec, n_max: int, l_max: int, trunc_degree: int, workers: int = 1) -> Th1AuditReport:
    """Truncation evidence that every shifted remainder is nonpositive-rooted, then min q_n."""
    if l_max < 0 or trunc_degree < 1:
        raise DomainError(f"Need l_max >= 0 and trunc_degree >= 1, got {l_max}, {trunc_degree}")
    horizon = max(n_max, l_max + trunc_degree)
    seq = materialize(spec, horizon)
    for k in range(l_max + trunc_degree + 1):
        if seq.coeffs[k] <= 0:
            raise DomainError(f"Remainder audit needs positive coefficients, got a_{k} = {seq.coeffs[k]}")

    logger.info(f"🚀 Remainder audit l=0..{l_max} at degree {trunc_degree}")
    ls = range(l_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(lambda l: _check_remainder(seq, l, trunc_degree), ls))
    else:
        checks = [_check_remainder(seq, l, trunc_degree) for l in ls]

    failing_all = [c.l for c in checks if not c.nonpositive_rooted]
    failing = failing_all[0] if failing_all else None
    if failing is not None:
        logger.info(f"⚠️ Remainder l={failing} truncation is not nonpositive-rooted; audit vacuous")
        return Th1AuditReport(
            n_max=n_max,
            l_max=l_max,
            trunc_degree=trunc_degree,
            remainders=checks,
            status="vacuous",
            label=f"vacuous: remainder l={failing} fails at degree {trunc_degree}",
            failing_l=failing,
            failing=failing_all,
        )

    q = second_quotients(seq, n_max)
    min_q = min(q.q)
    min_index = q.q.index(min_q) + 2
    logger.info(f"✅ All remainders pass; min q_n = {min_q} at n={min_index}")
    return Th1AuditReport(
        n_max=n_max,
        l_max=l_max,
        trunc_degree=trunc_degree,
        remainders=checks,
        status="supported",
        label=f"supported at degree {trunc_degree}",
        min_q=min_q,
        min_q_index=min_index,
        min_q_above_3=min_q > 3,
    )


def hutchinson_sections_check(seq: CoefficientSequence, degree: int) -> SectionsReport:
    """Every consecutive-term section a_lo z^0 + ... + a_hi z^{hi-lo}, 0 <= lo < hi <= degree."""
    if degree > seq.horizon:
        raise HorizonError(f"Degree {degree} exceeds horizon {seq.horizon}")
    checked = 0
    for lo in range(degree):
        for hi in range(lo + 1, degree + 1):
            p = section(seq, lo, hi)
            checked += 1
            if p.coeff(0) == 0 or not is_real_rooted_nonpositive(p).nonpositive_rooted:
                logger.info(f"❌ Section [{lo}, {hi}] is not nonpositive-rooted")
                return SectionsReport(degree=degree, sections_checked=checked, holds=False, first_failure=(lo, hi))
    return SectionsReport(degree=degree, sections_checked=checked, holds=True)


def monotone_tail_check(q: SecondQuotients, q_infinity: Fraction = Q_INFINITY_REFERENCE) -> MonotoneTailReport:
    """q_2 >= q_3 >= ... on the window and q_n >= q_infinity at the last index."""
    first_increase = next(
        (n for n in range(3, q.n_max + 1) if q.at(n) > q.at(n - 1)),
        None,
    )
    last = q.at(q.n_max)
    above = last >= q_infinity
    nonincreasing = first_increase is None
    return MonotoneTailReport(
        nonincreasing=nonincreasing,
        first_increase=first_increase,
        last_index=q.n_max,
        last_value=last,
        q_infinity=q_infinity,
        above_q_infinity=above,
        status="supported" if nonincreasing and above else "not supported",
    )
