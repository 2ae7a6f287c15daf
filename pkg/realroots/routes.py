from fastapi import APIRouter, HTTPException

from core.errors import VerificationError
from realroots.analysis import classify_theorem_st1, is_real_rooted_nonpositive
from realroots.schemas import PolynomialIn, RootReport, St1Request, TheoremSt1Verdict

router = APIRouter(prefix="/roots", tags=["Real Roots"])


@router.post("/report", response_model=RootReport)
def root_report(body: PolynomialIn):
    try:
        return is_real_rooted_nonpositive(body.to_polynomial())
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/st1", response_model=TheoremSt1Verdict)
def theorem_st1(body: St1Request):
    try:
        return classify_theorem_st1(body.payload)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))
