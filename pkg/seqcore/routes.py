from fastapi import APIRouter, HTTPException

from core.errors import VerificationError
from seqcore.materialize import materialize
from seqcore.operators import hadamard
from seqcore.schemas import CoefficientSequence, HadamardRequest, MaterializeRequest

router = APIRouter(prefix="/sequences", tags=["Sequences"])


@router.post("/materialize", response_model=CoefficientSequence)
def materialize_spec(body: MaterializeRequest):
    try:
        return materialize(body.spec, body.horizon)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/hadamard", response_model=CoefficientSequence)
def hadamard_product(body: HadamardRequest):
    try:
        return hadamard(materialize(body.left, body.horizon), materialize(body.right, body.horizon))
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))
