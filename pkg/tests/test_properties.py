"""Seeded randomized checks; every case is reproducible from its seed."""

from fractions import Fraction

import pytest

from core.errors import HorizonError
from core.sampling import make_rng, random_nonnegative_roots, random_quotients, random_rational
from quotients.conditions import d_inequalities, hutchinson_sections_check, lemma4_matrices, second_quotients
from quotients.schemas import SecondQuotients
from realroots.analysis import classify_theorem_st1, is_real_rooted_nonpositive
from realroots.polynomial import Polynomial
from realroots.schemas import St1Case
from realroots.sturm import sturm_count
from seqcore.materialize import materialize
from seqcore.operators import as_polynomial, hadamard, normalize
from seqcore.schemas import (
    CoefficientSequence,
    ExplicitSpec,
    ExponentialSpec,
    FromQuotientsSpec,
    GeometricSpec,
    PartialThetaSpec,
    RationalGFSpec,
)
from theta.certificate import TH3_CONSTANT, sign_alternation_certificate, verify_th3
from theta.enclosure import bounds, lift, working_precision
from theta.partial_sum import x0
from theta.schemas import Verdict
from toeplitz.determinant import cofactor_determinant, determinant
from toeplitz.minors import minor, toeplitz_matrix
from toeplitz.schemas import MinorRequest

HORIZON = 8


def random_index_pair(rng, order: int, n_max: int = HORIZON):
    rows = sorted(int(i) for i in rng.choice(n_max + 1, size=order, replace=False))
    cols = sorted(int(i) for i in rng.choice(n_max + 1, size=order, replace=False))
    return rows, cols


def random_spec(rng, family: int):
    if family == 0:
        return ExplicitSpec(coeffs=[random_rational(rng, Fraction(0), Fraction(5)) for _ in range(HORIZON + 1)])
    if family == 1:
        return GeometricSpec(c=random_rational(rng, Fraction(1, 2), Fraction(3)),
                             beta=random_rational(rng, Fraction(1, 3), Fraction(3)))
    if family == 2:
        return FromQuotientsSpec(q=random_quotients(rng, HORIZON - 1, lo=Fraction(1, 2)))
    return PartialThetaSpec(a_squared=random_rational(rng, Fraction(2), Fraction(6)))


# ==========================================================
# ✅ HUTCHINSON REGIME
# ==========================================================
@pytest.mark.parametrize("seed", range(100))
def test_hutchinson_truncations_are_nonpositive_rooted(seed):
    rng = make_rng(seed)
    degree = int(rng.integers(2, 13))
    seq = materialize(FromQuotientsSpec(q=random_quotients(rng, degree - 1)), degree)
    report = is_real_rooted_nonpositive(as_polynomial(seq))
    assert report.nonpositive_rooted
    assert report.real_root_count_nonpositive == degree


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_hutchinson_sections_are_nonpositive_rooted(seed):
    rng = make_rng(seed)
    degree = int(rng.integers(2, 13))
    seq = materialize(FromQuotientsSpec(q=random_quotients(rng, degree - 1)), degree)
    assert hutchinson_sections_check(seq, degree).holds


# ==========================================================
# ✅ DERIVATIVES OF ONE-POLE GENERATING FUNCTIONS
# ==========================================================
@pytest.mark.parametrize("seed", range(50))
def test_one_pole_derivative_stays_nonpositive_rooted(seed):
    rng = make_rng(1000 + seed)
    pole_order = int(rng.integers(1, 7))
    roots = random_nonnegative_roots(rng, int(rng.integers(0, pole_order + 1)))
    gf = RationalGFSpec(
        numerator=list(Polynomial.from_linear_factors(roots).coeffs),
        beta=random_rational(rng, Fraction(1, 4), Fraction(3)),
        pole_order=pole_order,
    )
    verdict = classify_theorem_st1(gf)
    assert verdict.case == St1Case.RATIONAL_OK
    assert verdict.derivative_numerator_nonpositive_rooted is True
    assert len(verdict.derivative_numerator.coeffs) <= pole_order + 1


# ==========================================================
# ✅ STURM COUNTING
# ==========================================================
@pytest.mark.parametrize("seed", range(30))
def test_sturm_count_matches_planted_roots(seed):
    rng = make_rng(11000 + seed)
    roots = sorted({random_rational(rng, Fraction(-5), Fraction(5)) for _ in range(int(rng.integers(1, 16)))})
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([-r, 1])
    for _ in range(int(rng.integers(0, 4))):
        b = random_rational(rng, Fraction(-2), Fraction(2))
        p = p * Polynomial([b * b + 1, 2 * b, 1])
    cut = random_rational(rng, Fraction(-5), Fraction(5))
    assert sturm_count(p) == len(roots)
    assert sturm_count(p, None, cut) == sum(1 for r in roots if r <= cut)
    assert sturm_count(p * Polynomial([-roots[0], 1])) == len(roots)


# ==========================================================
# ✅ MINORS
# ==========================================================
@pytest.mark.parametrize("seed", range(200))
def test_minor_matches_cofactor_expansion(seed):
    rng = make_rng(2000 + seed)
    seq = materialize(random_spec(rng, seed % 4), HORIZON)
    rows, cols = random_index_pair(rng, int(rng.integers(1, 6)))
    expected = cofactor_determinant(toeplitz_matrix(seq, rows, cols))
    assert minor(seq, MinorRequest(rows=rows, cols=cols)) == expected


@pytest.mark.parametrize("seed", range(20))
def test_geometric_scaling_of_minors(seed):
    rng = make_rng(3000 + seed)
    base = materialize(FromQuotientsSpec(q=random_quotients(rng, HORIZON - 1)), HORIZON)
    c = random_rational(rng, Fraction(1, 2), Fraction(3))
    beta = random_rational(rng, Fraction(1, 3), Fraction(3))
    scaled = hadamard(materialize(GeometricSpec(c=c, beta=beta), HORIZON), base)
    k = int(rng.integers(1, 5))
    rows, cols = random_index_pair(rng, k)
    req = MinorRequest(rows=rows, cols=cols)
    assert minor(scaled, req) == c ** k * beta ** (sum(cols) - sum(rows)) * minor(base, req)


# ==========================================================
# ✅ QUOTIENT IDENTITIES
# ==========================================================
@pytest.mark.parametrize("seed", range(20))
def test_d_values_are_determinants(seed):
    rng = make_rng(4000 + seed)
    q = SecondQuotients(q=random_quotients(rng, 8))
    a = materialize(FromQuotientsSpec(q=q.q), q.n_max)
    report = d_inequalities(q)
    assert minor(a, MinorRequest(rows=[0, 1, 2], cols=[1, 2, 3])) == report.d3
    assert minor(a, MinorRequest(rows=[0, 1, 2, 3], cols=[1, 2, 3, 4])) == report.d4
    c = a.coeffs
    for k in range(3, q.n_max):
        window = minor(a, MinorRequest(rows=[0, 1, 2], cols=[k - 1, k, k + 1]))
        # dividing rows and columns down to the normalized matrix
        scale = c[k - 1] ** 2 * c[k - 2] ** 2 / c[k - 3]
        assert window / scale * q.at(k - 1) == report.delta3[k - 2]
        assert determinant(lemma4_matrices(q, k).normalized) * q.at(k - 1) == report.delta3[k - 2]
    assert report.all_nonnegative


@pytest.mark.parametrize("seed", range(20))
def test_quotient_round_trip(seed):
    rng = make_rng(5000 + seed)
    q = random_quotients(rng, HORIZON - 1, lo=Fraction(1, 2))
    seq = materialize(FromQuotientsSpec(q=q), HORIZON)
    assert second_quotients(seq, HORIZON).q == q


@pytest.mark.parametrize("seed", range(20))
def test_normalization_preserves_quotients(seed):
    rng = make_rng(6000 + seed)
    spec = FromQuotientsSpec(
        q=random_quotients(rng, HORIZON - 1),
        a0=random_rational(rng, Fraction(1, 2), Fraction(4)),
        a1=random_rational(rng, Fraction(1, 2), Fraction(4)),
    )
    seq = materialize(spec, HORIZON)
    normalized = normalize(seq)
    assert normalized.coeffs[:2] == [1, 1]
    assert second_quotients(normalized, HORIZON).q == second_quotients(seq, HORIZON).q


@pytest.mark.parametrize("seed", range(20))
def test_quotients_at_least_one_give_log_concavity(seed):
    rng = make_rng(7000 + seed)
    a = materialize(FromQuotientsSpec(q=random_quotients(rng, HORIZON - 1, lo=Fraction(1), hi=Fraction(3))), HORIZON).coeffs
    assert all(a[k] ** 2 >= a[k - 1] * a[k + 1] for k in range(1, HORIZON))


# ==========================================================
# ✅ HADAMARD PRODUCT
# ==========================================================
@pytest.mark.parametrize("seed", range(10))
def test_hadamard_laws(seed):
    rng = make_rng(8000 + seed)
    a, b, c = (materialize(random_spec(rng, 0), HORIZON) for _ in range(3))
    ones = materialize(GeometricSpec(c=1, beta=1), HORIZON)
    assert hadamard(a, b).coeffs == hadamard(b, a).coeffs
    assert hadamard(hadamard(a, b), c).coeffs == hadamard(a, hadamard(b, c)).coeffs
    assert hadamard(a, ones).coeffs == a.coeffs


def test_hadamard_needs_equal_horizons():
    short = CoefficientSequence(coeffs=[1, 2])
    with pytest.raises(HorizonError):
        hadamard(short, materialize(ExponentialSpec(), 5))


# ==========================================================
# ✅ PARTIAL THETA
# ==========================================================
@pytest.mark.parametrize("a_squared", ["7/2", "3.503", "18/5", "4", "5", "10"])
def test_x0_solves_its_quadratic(a_squared):
    # x0 is the smaller root of x^2 - (A^3 / 2) x + A^3
    cube = Fraction(a_squared) ** 3
    with working_precision(160):
        x = x0(Fraction(a_squared))
        lo, hi = bounds(x * x - lift(cube / 2) * x + lift(cube))
        x_lo, _ = bounds(x)
    assert lo <= 0 <= hi
    assert 0 < x_lo and x_lo < cube / 4


@pytest.mark.parametrize("seed", range(10))
def test_certificate_points_increase_in_hutchinson_regime(seed):
    rng = make_rng(9000 + seed)
    n = int(rng.integers(4, 9))
    cert = sign_alternation_certificate(n, Fraction(4), SecondQuotients(q=random_quotients(rng, n - 1)))
    values = [Fraction(p.value.lo) for p in cert.points]
    assert values == sorted(values)
    assert cert.verdict == Verdict.PASS


@pytest.mark.slow
def test_ones_alternate_up_to_degree_thirty():
    report = verify_th3(GeometricSpec(c=1, beta=1), Fraction(18, 5), 30)
    assert report.verdict == Verdict.PASS
    assert [c.n for c in report.certificates] == list(range(4, 31))
    assert all(c.cross_check_root_count == c.n for c in report.certificates)


@pytest.mark.slow
def test_exponential_alternates_up_to_degree_twenty():
    report = verify_th3(ExponentialSpec(), TH3_CONSTANT, 20)
    assert report.verdict == Verdict.PASS
    assert all(c.cross_check_root_count == c.n for c in report.certificates)
