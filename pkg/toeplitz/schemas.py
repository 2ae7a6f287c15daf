from enum import Enum
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.rational import Rational
from seqcore.schemas import SequenceSpec


class MinorRequest(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[int] = Field(min_length=1)
    cols: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _square_and_increasing(self) -> "MinorRequest":
        if len(self.rows) != len(self.cols):
            raise ValueError(f"Non-square request: {len(self.rows)} rows, {len(self.cols)} cols")
        for name, idx in (("rows", self.rows), ("cols", self.cols)):
            if idx[0] < 0:
                raise ValueError(f"{name} must be nonnegative, got {idx}")
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"{name} must be strictly increasing, got {idx}")
        return self

    @property
    def order(self) -> int:
        return len(self.rows)


class MinorCertificate(BaseModel):
    rows: List[int]
    cols: List[int]
    value: Rational


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class TPWitness(BaseModel):
    order_bound: Union[int, Literal["unbounded"]]
    window: int
    verdict: Verdict
    failing: Optional[MinorCertificate] = None
    min_value: Rational
    minors_checked: int = 0

    @model_validator(mode="after")
    def _fail_has_certificate(self) -> "TPWitness":
        failed = self.verdict == Verdict.FAIL
        if failed != (self.failing is not None and self.failing.value < 0):
            raise ValueError("verdict fail requires a negative failing certificate")
        return self


class MinorBody(BaseModel):
    spec: SequenceSpec
    rows: List[int]
    cols: List[int]


class WindowRequest(BaseModel):
    """Body of the window check endpoints."""
    spec: SequenceSpec
    order: Optional[int] = Field(default=None, ge=1)
    window: Optional[int] = Field(default=None, ge=1)
