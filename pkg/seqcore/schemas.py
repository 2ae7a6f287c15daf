import json
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, field_validator, model_validator

from core.errors import SpecError
from core.rational import Rational


class SpecBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


# ==========================================================
# ✅ SEQUENCE SPECIFICATION VARIANTS
# ==========================================================
class ExplicitSpec(SpecBase):
    type: Literal["explicit"] = "explicit"
    coeffs: List[Rational]


class FromQuotientsSpec(SpecBase):
    """a_n = a_{n-1}^2 / (a_{n-2} q_n); q is indexed from 2."""
    type: Literal["from_quotients"] = "from_quotients"
    q: List[Rational]
    a0: Rational = Fraction(1)
    a1: Rational = Fraction(1)

    @model_validator(mode="after")
    def _positive(self) -> "FromQuotientsSpec":
        if self.a0 <= 0 or self.a1 <= 0:
            raise ValueError(f"a0 and a1 must be positive, got a0={self.a0}, a1={self.a1}")
        for n, qn in enumerate(self.q, start=2):
            if qn <= 0:
                raise ValueError(f"q_{n} must be positive, got {qn}")
        return self


class RationalGFSpec(SpecBase):
    """P(z) / (1 - beta z)^m"""
    type: Literal["rational_gf"] = "rational_gf"
    numerator: List[Rational]
    beta: Rational
    pole_order: int

    @model_validator(mode="after")
    def _valid(self) -> "RationalGFSpec":
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.pole_order < 1:
            raise ValueError(f"pole_order must be at least 1, got {self.pole_order}")
        return self


class AsweFiniteSpec(SpecBase):
    """C z^shift e^{gamma z} prod(1 + alpha_k z) / prod(1 - beta_k z)"""
    type: Literal["aswe_finite"] = "aswe_finite"
    c: Rational
    shift: int = 0
    alphas: List[Rational] = []
    betas: List[Rational] = []
    gamma: Rational = Fraction(0)

    @model_validator(mode="after")
    def _valid(self) -> "AsweFiniteSpec":
        if self.c < 0:
            raise ValueError(f"C must be nonnegative, got {self.c}")
        if self.shift < 0:
            raise ValueError(f"shift must be nonnegative, got {self.shift}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be nonnegative, got {self.gamma}")
        if any(a < 0 for a in self.alphas):
            raise ValueError("alphas must be nonnegative")
        if any(b < 0 for b in self.betas):
            raise ValueError("betas must be nonnegative")
        return self


class PartialThetaSpec(SpecBase):
    """Coefficients 1 / (a^2)^{k(k-1)/2}."""
    type: Literal["partial_theta"] = "partial_theta"
    a_squared: Rational

    @field_validator("a_squared")
    @classmethod
    def _above_one(cls, v: Fraction) -> Fraction:
        if v <= 1:
            raise ValueError(f"a_squared must exceed 1, got {v}")
        return v


class ExponentialSpec(SpecBase):
    type: Literal["exponential"] = "exponential"


class GeometricSpec(SpecBase):
    type: Literal["geometric"] = "geometric"
    c: Rational
    beta: Rational

    @model_validator(mode="after")
    def _positive(self) -> "GeometricSpec":
        if self.c <= 0 or self.beta <= 0:
            raise ValueError(f"c and beta must be positive, got c={self.c}, beta={self.beta}")
        return self


class HadamardSpec(SpecBase):
    type: Literal["hadamard"] = "hadamard"
    left: "SequenceSpec"
    right: "SequenceSpec"


class RemainderSpec(SpecBase):
    type: Literal["remainder"] = "remainder"
    inner: "SequenceSpec"
    l: int = Field(ge=0)


class DerivativeSpec(SpecBase):
    type: Literal["derivative"] = "derivative"
    inner: "SequenceSpec"


SequenceSpec = Annotated[
    Union[
        ExplicitSpec,
        FromQuotientsSpec,
        RationalGFSpec,
        AsweFiniteSpec,
        PartialThetaSpec,
        ExponentialSpec,
        GeometricSpec,
        HadamardSpec,
        RemainderSpec,
        DerivativeSpec,
    ],
    Field(discriminator="type"),
]

HadamardSpec.model_rebuild()
RemainderSpec.model_rebuild()
DerivativeSpec.model_rebuild()

_SPEC_ADAPTER: TypeAdapter = TypeAdapter(SequenceSpec)


# ==========================================================
# ✅ MATERIALIZED SEQUENCES
# ==========================================================
class CoefficientSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    coeffs: List[Rational]
    source: Optional[SequenceSpec] = None
    exact: bool = True

    @property
    def horizon(self) -> int:
        return len(self.coeffs) - 1

    def at(self, k: int) -> Fraction:
        """a_k, with a_k = 0 for k < 0."""
        if k < 0:
            return Fraction(0)
        return self.coeffs[k]


def parse_spec(raw: Union[str, bytes, Dict[str, Any], BaseModel]) -> SequenceSpec:
    """Parse the JSON encoding (text or decoded mapping) of a sequence spec."""
    if isinstance(raw, SpecBase):
        return raw
    try:
        if isinstance(raw, (str, bytes)):
            raw = json.loads(raw)
        return _SPEC_ADAPTER.validate_python(raw)
    except json.JSONDecodeError as e:
        raise SpecError(f"Malformed spec JSON: {e}") from e
    except ValidationError as e:
        raise SpecError(f"Invalid sequence spec: {e.errors(include_url=False)}") from e


def dump_spec(spec: SequenceSpec) -> Dict[str, Any]:
    return _SPEC_ADAPTER.dump_python(spec, mode="json")


# ==========================================================
# ✅ REQUEST BODIES
# ==========================================================
class MaterializeRequest(BaseModel):
    spec: SequenceSpec
    horizon: int = Field(ge=0)


class HadamardRequest(BaseModel):
    left: SequenceSpec
    right: SequenceSpec
    horizon: int = Field(ge=0)
