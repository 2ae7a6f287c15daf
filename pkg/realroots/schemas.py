from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from core.rational import Rational
from realroots.polynomial import Polynomial
from seqcore.schemas import AsweFiniteSpec, RationalGFSpec


class PolynomialIn(BaseModel):
    model_config = ConfigDict(frozen=True)

    coeffs: List[Rational]

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "PolynomialIn":
        return cls(coeffs=list(p.coeffs))


class RootReport(BaseModel):
    degree: int
    real_root_count_total: int
    real_root_count_nonpositive: int
    real_root_count_positive: int
    distinct_real_roots: int
    squarefree_defect: int
    real_rooted: bool
    nonpositive_rooted: bool


class RootWitness(BaseModel):
    """Isolating bracket (lo, hi] of a real root; exact when known."""
    lo: Rational
    hi: Rational
    exact: Optional[Rational] = None


class St1Case(str, Enum):
    ENTIRE_LPI = "Entire-LPI"
    RATIONAL_OK = "RationalOK"
    NOT_APPLICABLE = "NotApplicable"


class TheoremSt1Verdict(BaseModel):
    case: St1Case
    reason: str
    derivative_numerator: Optional[PolynomialIn] = None
    derivative_preserved: bool
    derivative_numerator_nonpositive_rooted: Optional[bool] = None
    positive_root_witness: Optional[RootWitness] = None


class PowerSumReport(BaseModel):
    sums: List[Rational]
    closed_forms: List[Rational]
    residues: List[Rational]


class St1Request(BaseModel):
    """Exactly one of polynomial, rational_gf or aswe_finite."""
    polynomial: Optional[PolynomialIn] = None
    rational_gf: Optional[RationalGFSpec] = None
    aswe_finite: Optional[AsweFiniteSpec] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "St1Request":
        given = [v for v in (self.polynomial, self.rational_gf, self.aswe_finite) if v is not None]
        if len(given) != 1:
            raise ValueError(f"Exactly one input form is required, got {len(given)}")
        return self

    @property
    def payload(self):
        return self.polynomial or self.rational_gf or self.aswe_finite
