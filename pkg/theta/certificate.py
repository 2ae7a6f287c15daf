"""
certificate.py
------------------------------------
Sign-alternation certificates for S_n^q and the Th3 sweep over n.
------------------------------------
S_n^q is evaluated at the n + 1 increasing points

    1 < x_0 < x_hat_3 < ... < x_hat_n < a^{2n-2} q_2 ... q_n

with expected signs +, -, +, -, ...  If every enclosure is sign-definite
and matches, the degree-n polynomial has n sign changes on (0, inf) and
therefore n positive zeros.  A straddling enclosure makes the verdict
inconclusive, never pass.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional

from core.errors import DomainError
from core.logger import get_logger
from quotients.conditions import second_quotients
from quotients.schemas import SecondQuotients
from realroots.sturm import root_count
from seqcore.materialize import materialize
from seqcore.operators import normalize
from seqcore.schemas import SequenceSpec
from theta.enclosure import Value, bounds, certainly_less, enclose, exact_or_none, sign_of, working_precision
from theta.partial_sum import (
    check_a_squared,
    endpoint,
    eval_partial_sum,
    hat_x,
    partial_sum_polynomial,
    partial_theta_coefficients,
    quotient,
    term_domination,
    x0,
    x0_domain_ok,
)
from theta.schemas import AlternationCertificate, PrecisionConfig, Th3Report, ThetaPoint, Verdict

logger = get_logger("theta")

TH3_CONSTANT = Fraction("3.503")


def _point(role: str, x: Value, expected: int, n: int, a_squared: Fraction, q: SecondQuotients,
           m: Optional[int] = None) -> ThetaPoint:
    s = eval_partial_sum(n, x, a_squared, q)
    regime = None
    if m is not None:
        regime = "hutchinson" if quotient(q, m) * a_squared >= 4 else "small-quotient"
    return ThetaPoint(
        role=role,
        m=m,
        value=enclose(x),
        exact_value=exact_or_none(x),
        evaluation=enclose(s),
        exact_evaluation=exact_or_none(s),
        expected_sign=expected,
        observed_sign=sign_of(s),
        term_domination=term_domination(x, a_squared, q, n),
        regime=regime,
    )


def sign_alternation_certificate(n: int, a_squared: Fraction, q: SecondQuotients,
                                 prec: Optional[PrecisionConfig] = None,
                                 cross_check: bool = True) -> AlternationCertificate:
    prec = prec or PrecisionConfig()
    check_a_squared(a_squared)
    if n < 4:
        raise DomainError(f"Certificates start at n = 4, got {n}")
    quotient(q, n)
    q_used = SecondQuotients(q=q.q[: n - 1])
    bits = prec.working_bits(n)

    cert = dict(n=n, a_squared=a_squared, q=q_used, working_bits=bits)
    if not x0_domain_ok(a_squared):
        return AlternationCertificate(
            **cert,
            verdict=Verdict.INCONCLUSIVE,
            reason=f"x_0 undefined: a^2 = {a_squared} is below 1 + sqrt(5)",
        )

    with working_precision(bits):
        xs: List[Value] = [Fraction(1), x0(a_squared, bits)]
        xs += [hat_x(m, a_squared, q_used, bits) for m in range(3, n + 1)]
        xs.append(endpoint(n, a_squared, q_used))
        for left, right in zip(xs, xs[1:]):
            if not certainly_less(left, right):
                raise DomainError(
                    f"Test points are not increasing ({bounds(left)[1]} vs {bounds(right)[0]}); "
                    f"check q and a^2 = {a_squared}"
                )

        points = [_point("unit", xs[0], 1, n, a_squared, q_used), _point("x0", xs[1], -1, n, a_squared, q_used)]
        for m in range(3, n + 1):
            points.append(_point("hat", xs[m - 1], (-1) ** (m - 1), n, a_squared, q_used, m=m))
        points.append(_point("endpoint", xs[-1], (-1) ** n, n, a_squared, q_used))

        s_n = eval_partial_sum(n, xs[1], a_squared, q_used)
        s_4 = eval_partial_sum(4, xs[1], a_squared, q_used)
        x0_below_s4 = certainly_less(s_n, s_4) and sign_of(s_4) == -1

    mismatched = [p for p in points if p.observed_sign is not None and p.observed_sign != p.expected_sign]
    undecided = [p for p in points if p.observed_sign is None]
    if mismatched:
        verdict = Verdict.FAIL
        first = mismatched[0]
        reason = f"sign {first.observed_sign} at {first.role}{first.m or ''}, expected {first.expected_sign}"
    elif undecided:
        verdict = Verdict.INCONCLUSIVE
        reason = f"{len(undecided)} enclosure(s) straddle 0 at {bits} bits"
    else:
        verdict = Verdict.PASS
        reason = f"{n} sign changes on (0, inf)"

    count = None
    if cross_check:
        count = root_count(partial_sum_polynomial(n, a_squared, q_used), Fraction(0), None)
        if verdict == Verdict.PASS and count != n:
            logger.error(f"❌ Certificate passed at n={n} but Sturm counts {count} positive roots")

    logger.debug(f"🔹 n={n}: {verdict.value} ({reason})")
    return AlternationCertificate(
        **cert,
        points=points,
        verdict=verdict,
        reason=reason,
        cross_check_root_count=count,
        x0_below_s4=x0_below_s4,
    )


def verify_th3(spec: SequenceSpec, a_squared: Fraction, n_max: int,
               prec: Optional[PrecisionConfig] = None, workers: int = 1) -> Th3Report:
    """Certificates for n = 4..n_max on the Hadamard product of spec with g_a."""
    check_a_squared(a_squared)
    if n_max < 4:
        raise DomainError(f"n_max must be at least 4, got {n_max}")
    seq = materialize(spec, n_max)
    normalized = seq.coeffs[0] != 1 or seq.coeffs[1] != 1
    if normalized:
        seq = normalize(seq)
    q = second_quotients(seq, n_max)

    logger.info(f"🚀 Th3 certificates n=4..{n_max} at a^2={a_squared}")
    ns = range(4, n_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            certificates = list(pool.map(lambda n: sign_alternation_certificate(n, a_squared, q, prec), ns))
    else:
        certificates = [sign_alternation_certificate(n, a_squared, q, prec) for n in ns]

    verdicts = {c.verdict for c in certificates}
    if Verdict.FAIL in verdicts:
        verdict = Verdict.FAIL
    elif Verdict.INCONCLUSIVE in verdicts:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.PASS
    icon = {Verdict.PASS: "✅", Verdict.FAIL: "❌", Verdict.INCONCLUSIVE: "⚠️"}[verdict]
    logger.info(f"{icon} Th3 sweep: {verdict.value}")

    return Th3Report(
        a_squared=a_squared,
        n_max=n_max,
        normalized=normalized,
        meets_th3_constant=a_squared >= TH3_CONSTANT,
        hadamard_coefficients=partial_theta_coefficients(n_max, a_squared, q),
        certificates=certificates,
        verdict=verdict,
    )
