import math
from fractions import Fraction

import pytest

from core.errors import BracketError, DomainError, HorizonError
from quotients.schemas import SecondQuotients
from seqcore.schemas import ExplicitSpec, FromQuotientsSpec, GeometricSpec
from theta.bounds import a_b8, b14_rhs, c2_rhs, lemma_bounds_report
from theta.certificate import TH3_CONSTANT, sign_alternation_certificate, verify_th3
from theta.constants import (
    _bisect,
    _plain_width,
    estimate_constant,
    simplest_between,
    stability_rerun,
    truncation_real_rooted,
)
from theta.enclosure import bounds, certainly_less, enclose, lift, sign_of, sqrt, working_precision
from theta.partial_sum import (
    endpoint,
    eval_partial_sum,
    hat_x,
    partial_sum_polynomial,
    partial_theta_coefficients,
    s4_unit_window_roots,
    t4_decomposition,
    x0,
    x0_domain_ok,
)
from theta.schemas import ConstantName, Enclosure, PrecisionConfig, Verdict


def Q(*values) -> SecondQuotients:
    return SecondQuotients(q=[Fraction(v) for v in values])


def contains(x, value: float, slack: float = 1e-12) -> bool:
    lo, hi = bounds(x)
    return float(lo) - slack <= value <= float(hi) + slack


# ==========================================================
# ✅ ENCLOSURES
# ==========================================================
def test_lift_and_bounds():
    with working_precision(128):
        third = lift(Fraction(1, 3))
        lo, hi = bounds(third)
    assert lo <= Fraction(1, 3) <= hi
    assert hi - lo < Fraction(1, 2 ** 120)
    assert bounds(Fraction(2, 7)) == (Fraction(2, 7), Fraction(2, 7))


@pytest.mark.parametrize("bits", [64, 300, 1200])
def test_bounds_are_exact_at_high_precision(bits):
    with working_precision(bits):
        root = sqrt(Fraction(2))
        lo, hi = bounds(root)
        neg_lo, neg_hi = bounds(-root)
        e = enclose(root)
    assert lo * lo <= 2 <= hi * hi
    assert 0 < hi - lo < Fraction(1, 2 ** (bits - 8))
    assert (neg_lo, neg_hi) == (-hi, -lo)
    assert Fraction(e.lo) <= lo and hi <= Fraction(e.hi)


def test_bounds_reject_infinite_endpoints():
    from mpmath import iv

    with pytest.raises(DomainError):
        bounds(iv.mpf(["1", "inf"]))


def test_sign_of():
    assert sign_of(Fraction(-1, 9)) == -1
    assert sign_of(Fraction(0)) == 0
    with working_precision(64):
        assert sign_of(sqrt(Fraction(2)) - 1) == 1


def test_enclose_rounds_outward():
    e = enclose(Fraction(2, 3))
    assert Fraction(e.lo) <= Fraction(2, 3) <= Fraction(e.hi)
    assert e.lo.startswith("0.66666") and e.hi.endswith("7")
    assert Enclosure(lo="1", hi="2").model_dump() == ["1", "2"]


def test_precision_is_restored():
    from mpmath import iv

    before = iv.prec
    with working_precision(300):
        assert iv.prec == 300
    assert iv.prec == before


# ==========================================================
# ✅ PARTIAL SUMS AND TEST POINTS
# ==========================================================
@pytest.mark.parametrize(
    "n, x, a_squared, q, expected",
    [
        (0, 7, 4, None, 1),
        (2, 2, 4, None, 0),
        (2, 2, 4, (2,), Fraction(-1, 2)),
        (3, 1, 2, None, Fraction(1, 2) - Fraction(1, 8)),
    ],
)
def test_eval_partial_sum(n, x, a_squared, q, expected):
    qs = Q(*q) if q else None
    assert eval_partial_sum(n, Fraction(x), Fraction(a_squared), qs) == expected


def test_eval_partial_sum_errors():
    with pytest.raises(DomainError):
        eval_partial_sum(2, Fraction(1), Fraction(1))
    with pytest.raises(HorizonError):
        eval_partial_sum(4, Fraction(1), Fraction(4), Q(4, 4))


def test_coefficients_match_hadamard_statement():
    coeffs = partial_theta_coefficients(3, Fraction(4), Q(2, 3))
    assert coeffs == [1, 1, Fraction(1, 8), Fraction(1, 8 * 16 * 6)]
    assert partial_sum_polynomial(3, Fraction(4), Q(2, 3)).coeffs == (1, -1, Fraction(1, 8), Fraction(-1, 768))


def test_interval_evaluation_encloses_exact_value():
    with working_precision(128):
        s = eval_partial_sum(5, lift(Fraction(5, 2)), Fraction(4))
        lo, hi = bounds(s)
    exact = eval_partial_sum(5, Fraction(5, 2), Fraction(4))
    assert lo <= exact <= hi


def test_x0_at_four():
    with working_precision(128):
        x = x0(Fraction(4))
        residual = x / 8 + 8 / x - 4
        assert contains(x, 16 - 8 * math.sqrt(3))
        assert certainly_less(Fraction(1), x) and certainly_less(x, Fraction(4))
        lo, hi = bounds(residual)
    assert lo <= 0 <= hi
    assert hi - lo < Fraction(1, 2 ** 100)


def test_x0_domain():
    assert x0_domain_ok(Fraction(4))
    assert not x0_domain_ok(Fraction(3))
    with pytest.raises(DomainError):
        x0(Fraction(3))


@pytest.mark.parametrize(
    "m, q, expected",
    [(3, None, 8), (4, None, 32), (3, (4, 4), 64)],
)
def test_hat_x(m, q, expected):
    with working_precision(128):
        x = hat_x(m, Fraction(4), Q(*q) if q else None)
        assert contains(x, expected)


def test_hat_x_needs_m_three():
    with pytest.raises(DomainError):
        hat_x(2, Fraction(4))


def test_endpoint_is_rational():
    assert endpoint(3, Fraction(4), Q(2, 3)) == 16 * 6


def test_t4_decomposition_strict_iff_q2_above_one():
    assert t4_decomposition(Fraction(2), Fraction(4), Q(2, 2, 2)).strict
    assert not t4_decomposition(Fraction(2), Fraction(4), Q(1, 1, 1)).strict
    with working_precision(128):
        report = t4_decomposition(x0(Fraction(4)), Fraction(4), Q(3, 3, 3))
    assert report.strict


def test_s4_unit_window():
    report = s4_unit_window_roots(Fraction(4))
    assert report.lemma_range
    assert report.roots_in_window == report.expected == 2


# ==========================================================
# ✅ CERTIFICATES
# ==========================================================
def test_certificate_ones_eighteen_fifths():
    cert = sign_alternation_certificate(6, Fraction(18, 5), Q(*[1] * 5))
    assert cert.verdict == Verdict.PASS
    assert cert.cross_check_root_count == 6
    assert len(cert.points) == 7
    assert [p.expected_sign for p in cert.points] == [1, -1, 1, -1, 1, -1, 1]


def test_certificate_hutchinson_regime():
    cert = sign_alternation_certificate(6, Fraction(4), Q(*[4] * 5))
    assert cert.verdict == Verdict.PASS
    assert all(p.regime == "hutchinson" for p in cert.points if p.role == "hat")


def test_certificate_below_threshold():
    cert = sign_alternation_certificate(6, Fraction(3), Q(*[1] * 5))
    assert cert.verdict in (Verdict.FAIL, Verdict.INCONCLUSIVE)


def test_certificate_points_increase():
    cert = sign_alternation_certificate(8, Fraction(18, 5), Q(*[1] * 7))
    values = [Fraction(p.value.lo) for p in cert.points]
    assert values == sorted(values)
    assert cert.points[0].exact_value == 1
    assert cert.points[-1].exact_value == Fraction(18, 5) ** 7


def test_certificate_trims_quotients():
    cert = sign_alternation_certificate(4, Fraction(4), Q(*[4] * 9))
    assert cert.q.q == [4, 4, 4]


def test_certificate_errors():
    with pytest.raises(DomainError):
        sign_alternation_certificate(3, Fraction(4), Q(4, 4))
    with pytest.raises(HorizonError):
        sign_alternation_certificate(6, Fraction(4), Q(4, 4))


def test_precision_grows_with_degree():
    prec = PrecisionConfig(bits=96, bits_per_degree=2)
    assert prec.working_bits(10) == 116
    cert = sign_alternation_certificate(5, Fraction(4), Q(*[4] * 4), prec, cross_check=False)
    assert cert.working_bits == 106
    assert cert.cross_check_root_count is None


def test_verify_th3_ones():
    report = verify_th3(GeometricSpec(c=1, beta=1), Fraction(18, 5), 20)
    assert report.verdict == Verdict.PASS
    assert all(c.cross_check_root_count == c.n for c in report.certificates)
    assert not report.normalized
    assert report.meets_th3_constant


def test_verify_th3_exponential(exponential):
    report = verify_th3(exponential, TH3_CONSTANT, 12)
    assert report.verdict == Verdict.PASS
    assert report.meets_th3_constant
    assert [c.n for c in report.certificates] == list(range(4, 13))


def test_verify_th3_normalizes():
    report = verify_th3(GeometricSpec(c=3, beta=2), Fraction(4), 6)
    assert report.normalized
    assert report.hadamard_coefficients[:3] == [1, 1, Fraction(1, 4)]


def test_verify_th3_parallel_matches_serial():
    spec = FromQuotientsSpec(q=[5, 5, "9/2", 6, 5, 5])
    assert verify_th3(spec, Fraction(4), 7) == verify_th3(spec, Fraction(4), 7, workers=3)


def test_verify_th3_zero_coefficient():
    with pytest.raises(DomainError):
        verify_th3(ExplicitSpec(coeffs=[1, 1, 0, 1, 1, 1]), Fraction(4), 5)


# ==========================================================
# ✅ LEMMA BOUNDS
# ==========================================================
def test_a_b8():
    assert a_b8(Fraction(18, 5)) == Fraction(80, 81)


def test_lemma_bounds_at_eighteen_fifths():
    report = lemma_bounds_report(Fraction(18, 5), (1, 1, 1))
    by_name = {b.name: b for b in report.bounds}
    assert report.a_b8 == Fraction(80, 81)
    assert report.three_below_a2_below_four
    l6 = by_name["L6"]
    assert l6.positive
    assert Fraction("0.0870") < Fraction(l6.value.lo) <= Fraction(l6.value.hi) < Fraction("0.0885")
    assert not by_name["e1"].in_domain or by_name["e1"].positive
    assert report.mu == 2


def test_lemma_bounds_e_terms_at_four():
    by_name = {b.name: b for b in lemma_bounds_report(Fraction(4), (4, 4, 4)).bounds}
    assert by_name["e1"].positive and by_name["e2"].positive


def test_lemma_bounds_outside_x0_domain():
    by_name = {b.name: b for b in lemma_bounds_report(Fraction(3), (1, 1, 1)).bounds}
    assert not by_name["e1"].in_domain
    assert by_name["e1"].value is None


def test_b14_and_c2_exact_signs():
    assert b14_rhs(Fraction(19, 10)) > 0 > b14_rhs(Fraction(9, 5))
    assert c2_rhs(Fraction(39, 20)) > 0 > c2_rhs(Fraction(9, 5))


# ==========================================================
# ✅ THRESHOLDS
# ==========================================================
def test_estimate_a0_squared():
    report = estimate_constant(ConstantName.A0_SQUARED, Fraction(1, 10 ** 6))
    assert abs(report.estimate - Fraction("3.41089186")) < Fraction(1, 10 ** 4)
    lo, hi = report.bracket
    assert hi - lo <= 2 * report.tolerance
    assert lo <= report.estimate <= hi


def test_estimate_ll13_root():
    report = estimate_constant(ConstantName.LL13_ROOT, Fraction(1, 10 ** 5))
    assert abs(report.estimate - Fraction("1.87152")) < Fraction(1, 10 ** 4)
    assert Fraction("3.5025") <= report.squared <= Fraction("3.5027")
    assert report.th3_constant == TH3_CONSTANT
    lo_res, hi_res = report.residual
    assert lo_res <= 0 < hi_res


def test_estimate_rejects_bad_tolerance():
    with pytest.raises(DomainError):
        estimate_constant(ConstantName.LL13_ROOT, Fraction(0))


def test_bisect_requires_straddle():
    with pytest.raises(BracketError):
        _bisect(lambda x: x > 5, Fraction(0), Fraction(1), _plain_width, Fraction(1, 10), "demo", False)


@pytest.mark.parametrize(
    "x, y, expected",
    [
        ("307/100", "17/5", "10/3"),
        ("1/3", "1/3", "1/3"),
        ("2", "5/2", "2"),
        ("3.2336", "3.2337", "346/107"),
        ("-7/5", "-4/3", "-4/3"),
    ],
)
def test_simplest_between(x, y, expected):
    assert simplest_between(Fraction(x), Fraction(y)) == Fraction(expected)


def test_bisect_split_points_stay_small():
    seen = []

    def predicate(x):
        seen.append(x)
        return x > Fraction(1, 7) + Fraction(1, 10 ** 9)

    lo, hi, iterations = _bisect(predicate, Fraction(0), Fraction(1), _plain_width, Fraction(1, 10 ** 6), "demo", False)
    assert lo < Fraction(1, 7) + Fraction(1, 10 ** 9) < hi and hi - lo <= Fraction(1, 10 ** 6)
    assert iterations <= math.ceil(math.log(10 ** 6, 16 / 9))
    assert max(x.denominator for x in seen) < 10 ** 7


def test_truncation_transition():
    assert truncation_real_rooted(Fraction(4), 20)
    assert not truncation_real_rooted(Fraction(3), 20)


@pytest.mark.slow
def test_estimate_q_infinity_with_rerun():
    report = estimate_constant(ConstantName.Q_INFINITY, Fraction(1, 10 ** 4), degree=40)
    assert abs(report.estimate - Fraction("3.23363666")) < Fraction(1, 10 ** 3)
    assert report.tail_guard_ok
    stability = stability_rerun(report, degree=60)
    assert stability.agrees


def test_stability_rerun_only_for_q_infinity():
    report = estimate_constant(ConstantName.LL13_ROOT, Fraction(1, 10 ** 3))
    with pytest.raises(DomainError):
        stability_rerun(report)
