from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query

from core.config import Settings, get_settings
from core.errors import VerificationError
from core.rational import parse_rational
from theta.bounds import lemma_bounds_report
from theta.certificate import verify_th3
from theta.constants import estimate_constant
from theta.partial_sum import eval_partial_sum, partial_theta_coefficients
from theta.schemas import (
    BoundsReport,
    BoundsRequest,
    ConstantName,
    PartialSumReport,
    PartialSumRequest,
    PrecisionConfig,
    Th3Report,
    Th3Request,
    ThresholdReport,
)

router = APIRouter(prefix="/theta", tags=["Partial Theta"])


@router.post("/partial-sum", response_model=PartialSumReport)
def partial_sum(body: PartialSumRequest):
    try:
        return PartialSumReport(
            n=body.n,
            x=body.x,
            a_squared=body.a_squared,
            coefficients=partial_theta_coefficients(body.n, body.a_squared, body.q),
            value=eval_partial_sum(body.n, body.x, body.a_squared, body.q),
        )
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/certificate", response_model=Th3Report)
def certificate(body: Th3Request, settings: Settings = Depends(get_settings)):
    try:
        return verify_th3(
            body.spec,
            body.a_squared,
            body.n_max or max(settings.nmax, 4),
            PrecisionConfig(bits=settings.precision_bits),
            workers=settings.workers,
        )
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/bounds", response_model=BoundsReport)
def bounds(body: BoundsRequest, settings: Settings = Depends(get_settings)):
    try:
        return lemma_bounds_report(body.a_squared, body.q_triple, body.m_label, bits=settings.precision_bits)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/constants/{name}", response_model=ThresholdReport)
def constant(name: ConstantName, tol: Optional[str] = Query(None, description="Bracket width, e.g. 1e-4"),
             settings: Settings = Depends(get_settings)):
    try:
        return estimate_constant(
            name,
            parse_rational(tol or settings.tol),
            degree=settings.q_infinity_degree,
            precision_bits=settings.precision_bits,
        )
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))
