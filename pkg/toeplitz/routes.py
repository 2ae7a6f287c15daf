from typing import Optional

from fastapi import APIRouter, Depends, HTTPException
from pydantic import ValidationError

from core.config import Settings, get_settings
from core.errors import VerificationError
from seqcore.materialize import materialize
from toeplitz import minors
from toeplitz.schemas import MinorBody, MinorCertificate, MinorRequest, TPWitness, WindowRequest

router = APIRouter(prefix="/toeplitz", tags=["Toeplitz"])


@router.post("/minor", response_model=MinorCertificate)
def minor(body: MinorBody):
    try:
        req = MinorRequest(rows=body.rows, cols=body.cols)
        seq = materialize(body.spec, max(req.rows + req.cols))
        return MinorCertificate(rows=req.rows, cols=req.cols, value=minors.minor(seq, req))
    except ValidationError as e:
        raise HTTPException(status_code=400, detail=e.errors(include_url=False, include_context=False))
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/check", response_model=TPWitness)
def check_window(body: WindowRequest, settings: Settings = Depends(get_settings)):
    order = body.order or settings.order
    window = body.window or settings.window
    try:
        return minors.check_tp_window(materialize(body.spec, window), order, window)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/negative-minor", response_model=Optional[MinorCertificate])
def negative_minor(body: WindowRequest, settings: Settings = Depends(get_settings)):
    order = body.order or settings.order
    window = body.window or settings.window
    try:
        return minors.find_negative_minor(materialize(body.spec, window), order, window)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))
