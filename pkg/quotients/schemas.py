from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.errors import HorizonError
from core.rational import Rational
from seqcore.schemas import SequenceSpec


class SecondQuotients(BaseModel):
    """q_2..q_n; q[0] is q_2."""
    model_config = ConfigDict(frozen=True)

    q: List[Rational] = Field(min_length=1)

    @field_validator("q")
    @classmethod
    def _positive(cls, v: List[Fraction]) -> List[Fraction]:
        for n, qn in enumerate(v, start=2):
            if qn <= 0:
                raise ValueError(f"q_{n} must be positive, got {qn}")
        return v

    @property
    def n_max(self) -> int:
        return len(self.q) + 1

    def at(self, n: int) -> Fraction:
        """q_n, with the convention q_1 = 1."""
        if n == 1:
            return Fraction(1)
        if not 2 <= n <= self.n_max:
            raise HorizonError(f"q_{n} outside 1..{self.n_max}")
        return self.q[n - 2]


# ==========================================================
# ✅ NECESSARY CONDITIONS
# ==========================================================
class NecessaryReport(BaseModel):
    values: List[Rational]
    first_violation: Optional[int] = None
    q2_at_least_2: bool
    coefficient_form: Rational
    chain_holds: bool
    limit_value: Rational


class DReport(BaseModel):
    delta2: List[Rational]
    d3: Rational
    d4: Optional[Rational] = None
    delta3: List[Rational]
    delta3_from: int = 2
    uses_q1_convention: bool
    delta2_nonnegative: bool
    d3_nonnegative: bool
    d4_nonnegative: Optional[bool] = None
    delta3_nonnegative: bool

    @property
    def all_nonnegative(self) -> bool:
        return (
            self.delta2_nonnegative
            and self.d3_nonnegative
            and self.d4_nonnegative is not False
            and self.delta3_nonnegative
        )


class Lemma4Matrices(BaseModel):
    k: int
    leading: List[List[Rational]]
    normalized: List[List[Rational]]
    uses_q1_convention: bool


# ==========================================================
# ✅ AUDITS
# ==========================================================
class RemainderCheck(BaseModel):
    l: int
    degree: int
    nonpositive_rooted: bool
    real_root_count_nonpositive: int


class Th1AuditReport(BaseModel):
    n_max: int
    l_max: int
    trunc_degree: int
    remainders: List[RemainderCheck]
    status: Literal["supported", "vacuous"]
    label: str
    failing_l: Optional[int] = None
    failing: List[int] = []
    min_q: Optional[Rational] = None
    min_q_index: Optional[int] = None
    min_q_above_3: Optional[bool] = None


class SectionsReport(BaseModel):
    degree: int
    sections_checked: int
    holds: bool
    first_failure: Optional[Tuple[int, int]] = None


class MonotoneTailReport(BaseModel):
    nonincreasing: bool
    first_increase: Optional[int] = None
    last_index: int
    last_value: Rational
    q_infinity: Rational
    above_q_infinity: bool
    status: Literal["supported", "not supported"]


# ==========================================================
# ✅ REQUEST BODIES
# ==========================================================
class QuotientRequest(BaseModel):
    spec: SequenceSpec
    n_max: Optional[int] = Field(default=None, ge=2)


class AuditRequest(BaseModel):
    spec: SequenceSpec
    n_max: Optional[int] = Field(default=None, ge=2)
    l_max: Optional[int] = Field(default=None, ge=0)
    trunc: Optional[int] = Field(default=None, ge=1)
