from enum import Enum, IntEnum
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel

from quotients.schemas import Th1AuditReport
from seqcore.schemas import SequenceSpec
from toeplitz.schemas import MinorCertificate

SCHEMA_VERSION = "1"


class Command(str, Enum):
    CHECK_TP = "check-tp"
    QUOTIENTS = "quotients"
    HUTCHINSON = "hutchinson"
    LEMMA1 = "lemma1"
    D_INEQ = "d-ineq"
    VERIFY_ST1 = "verify-st1"
    TH1_AUDIT = "th1-audit"
    VERIFY_TH3 = "verify-th3"
    ESTIMATE = "estimate"
    EXPLORE_C1 = "explore-c1"
    HADAMARD = "hadamard"


class Outcome(str, Enum):
    HOLDS = "holds"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


class ExitCode(IntEnum):
    HOLDS = 0
    REFUTED = 1
    INCONCLUSIVE = 2
    USAGE = 3


EXIT_CODES = {
    Outcome.HOLDS: ExitCode.HOLDS,
    Outcome.REFUTED: ExitCode.REFUTED,
    Outcome.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
}


class Report(BaseModel):
    schema_version: Literal["1"] = SCHEMA_VERSION
    command: Command
    inputs: Dict[str, Any]
    verdict: Outcome
    result: Any
    seed: int
    elapsed_seconds: float
    settings: Dict[str, Any]


# ==========================================================
# ✅ CONJECTURE EXPLORATION
# ==========================================================
class GridCell(BaseModel):
    b: SequenceSpec
    certificate: Optional[MinorCertificate] = None


class ExploreReport(BaseModel):
    candidate: SequenceSpec
    max_order: int
    window: int
    phase1: Optional[Th1AuditReport] = None
    phase1_note: str = ""
    phase2: List[GridCell] = []
    counterexample: Optional[GridCell] = None
    summary: str
    verdict: Outcome
