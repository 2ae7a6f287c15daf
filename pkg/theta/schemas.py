from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_serializer

from core.rational import Rational
from quotients.schemas import SecondQuotients
from seqcore.schemas import SequenceSpec


class PrecisionConfig(BaseModel):
    """A sign counts only when its enclosure excludes 0."""
    model_config = ConfigDict(frozen=True)

    bits: int = Field(128, ge=64)
    bits_per_degree: int = Field(4, ge=0)

    def working_bits(self, n: int) -> int:
        return self.bits + self.bits_per_degree * n


class Enclosure(BaseModel):
    """Outward-rounded decimal bounds, serialized as [lo, hi]."""
    model_config = ConfigDict(frozen=True)

    lo: str
    hi: str

    @model_serializer
    def _as_pair(self) -> List[str]:
        return [self.lo, self.hi]


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


# ==========================================================
# ✅ SIGN-ALTERNATION CERTIFICATES
# ==========================================================
class ThetaPoint(BaseModel):
    role: Literal["unit", "x0", "hat", "endpoint"]
    m: Optional[int] = None
    value: Enclosure
    exact_value: Optional[Rational] = None
    evaluation: Enclosure
    exact_evaluation: Optional[Rational] = None
    expected_sign: int
    observed_sign: Optional[int] = None
    term_domination: List[bool] = []
    regime: Optional[Literal["hutchinson", "small-quotient"]] = None


class AlternationCertificate(BaseModel):
    n: int
    a_squared: Rational
    q: SecondQuotients
    points: List[ThetaPoint] = []
    verdict: Verdict
    reason: str = ""
    working_bits: int
    cross_check_root_count: Optional[int] = None
    x0_below_s4: Optional[bool] = None


class Th3Report(BaseModel):
    a_squared: Rational
    n_max: int
    normalized: bool
    meets_th3_constant: bool
    hadamard_coefficients: List[Rational]
    certificates: List[AlternationCertificate]
    verdict: Verdict


# ==========================================================
# ✅ THRESHOLDS
# ==========================================================
class ConstantName(str, Enum):
    Q_INFINITY = "q_infinity"
    A0_SQUARED = "a0_squared"
    LL13_ROOT = "ll13_root"


class ThresholdReport(BaseModel):
    name: ConstantName
    bracket: Tuple[Rational, Rational]
    estimate: Rational
    tolerance: Rational
    iterations: int
    reference: Rational
    squared: Optional[Rational] = None
    th3_constant: Optional[Rational] = None
    residual: Optional[Tuple[Rational, Rational]] = None
    truncation_degree: Optional[int] = None
    tail_guard_bits: Optional[float] = None
    tail_guard_ok: Optional[bool] = None


class StabilityReport(BaseModel):
    degree: int
    bracket: Tuple[Rational, Rational]
    lo_real_rooted: bool
    hi_real_rooted: bool
    agrees: bool
    rerun_estimate: Optional[Rational] = None
    estimate_shift: Optional[Rational] = None


# ==========================================================
# ✅ LEMMA DIAGNOSTICS
# ==========================================================
class BoundValue(BaseModel):
    name: str
    value: Optional[Enclosure] = None
    exact: Optional[Rational] = None
    positive: Optional[bool] = None
    in_domain: bool = True
    note: str = ""


class ProductBound(BaseModel):
    lhs: Rational
    rhs: Rational
    holds: bool


class BoundsReport(BaseModel):
    a_squared: Rational
    m_label: str
    q_triple: Tuple[Rational, Rational, Rational]
    a_b8: Rational
    three_below_a2_below_four: bool
    q_m_small: bool
    bounds: List[BoundValue]
    b7: ProductBound
    mu: Rational
    mu_at_least_a_b8: bool


class T4Report(BaseModel):
    t4: Enclosure
    lower_bound: Enclosure
    strict: Optional[bool] = None


class S4WindowReport(BaseModel):
    a_squared: Rational
    roots_in_window: int
    lemma_range: bool
    expected: Optional[int] = None


# ==========================================================
# ✅ REQUEST BODIES
# ==========================================================
class PartialSumRequest(BaseModel):
    n: int = Field(ge=0)
    x: Rational
    a_squared: Rational
    q: Optional[SecondQuotients] = None


class PartialSumReport(BaseModel):
    n: int
    x: Rational
    a_squared: Rational
    coefficients: List[Rational]
    value: Rational


class Th3Request(BaseModel):
    spec: SequenceSpec
    a_squared: Rational
    n_max: Optional[int] = Field(default=None, ge=4)


class BoundsRequest(BaseModel):
    a_squared: Rational
    q_triple: Tuple[Rational, Rational, Rational]
    m_label: str = "m"
