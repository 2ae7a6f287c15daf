from fastapi import APIRouter, Depends, HTTPException

from core.config import Settings, get_settings
from core.errors import VerificationError
from quotients import conditions
from quotients.schemas import (
    AuditRequest,
    DReport,
    MonotoneTailReport,
    NecessaryReport,
    QuotientRequest,
    SecondQuotients,
    Th1AuditReport,
)
from seqcore.materialize import materialize

router = APIRouter(prefix="/quotients", tags=["Quotients"])


def _quotients(body: QuotientRequest, settings: Settings) -> SecondQuotients:
    n_max = body.n_max or settings.nmax
    return conditions.second_quotients(materialize(body.spec, n_max), n_max)


@router.post("/second", response_model=SecondQuotients)
def second(body: QuotientRequest, settings: Settings = Depends(get_settings)):
    try:
        return _quotients(body, settings)
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/lemma1", response_model=NecessaryReport)
def lemma1(body: QuotientRequest, settings: Settings = Depends(get_settings)):
    try:
        return conditions.lemma1_chain(_quotients(body, settings))
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/d-inequalities", response_model=DReport)
def d_inequalities(body: QuotientRequest, settings: Settings = Depends(get_settings)):
    try:
        return conditions.d_inequalities(_quotients(body, settings))
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/monotone-tail", response_model=MonotoneTailReport)
def monotone_tail(body: QuotientRequest, settings: Settings = Depends(get_settings)):
    try:
        return conditions.monotone_tail_check(_quotients(body, settings))
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/th1-audit", response_model=Th1AuditReport)
def th1_audit(body: AuditRequest, settings: Settings = Depends(get_settings)):
    try:
        return conditions.th1_audit(
            body.spec,
            body.n_max or settings.nmax,
            settings.lmax if body.l_max is None else body.l_max,
            body.trunc or settings.trunc,
            workers=settings.workers,
        )
    except VerificationError as e:
        raise HTTPException(status_code=400, detail=str(e))
