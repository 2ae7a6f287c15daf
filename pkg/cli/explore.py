# cli/explore.py
# Bounded search for counterexamples to the TP-infinity preserver conjecture.

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from tqdm import tqdm

from cli.schemas import ExploreReport, GridCell, Outcome
from core.errors import DomainError, HorizonError
from core.logger import get_logger
from core.sampling import make_rng, random_quotients
from quotients.conditions import th1_audit
from seqcore.materialize import materialize
from seqcore.operators import hadamard
from seqcore.schemas import AsweFiniteSpec, ExponentialSpec, FromQuotientsSpec, GeometricSpec, SequenceSpec
from toeplitz.minors import find_negative_minor

logger = get_logger("cli.explore")


def default_grid() -> List[SequenceSpec]:
    return [
        GeometricSpec(c=1, beta=1),
        ExponentialSpec(),
        AsweFiniteSpec(c=1, alphas=[1, 1]),
    ]


def random_grid(count: int, window: int, seed: int) -> List[SequenceSpec]:
    """FromQuotients instances with q_n in [4, 10]; TP-infinity by Hutchinson's theorem."""
    rng = make_rng(seed)
    return [FromQuotientsSpec(q=random_quotients(rng, window - 1)) for _ in range(count)]


def _search_cell(candidate: SequenceSpec, b: SequenceSpec, max_order: int, window: int) -> GridCell:
    product = hadamard(materialize(candidate, window), materialize(b, window))
    return GridCell(b=b, certificate=find_negative_minor(product, max_order, window))


def explore_c1(candidate: SequenceSpec, grid: Sequence[SequenceSpec], max_order: int, window: int,
               n_max: int = 12, l_max: int = 4, trunc: int = 24, workers: int = 1,
               progress: bool = False) -> ExploreReport:
    if not grid:
        raise DomainError("Exploration grid is empty")
    base = dict(candidate=candidate, max_order=max_order, window=window)

    phase1 = None
    note = ""
    try:
        phase1 = th1_audit(candidate, n_max, l_max, trunc)
    except (DomainError, HorizonError) as e:
        note = f"remainder audit skipped: {e}"
        logger.info(f"⚠️ {note}")

    if phase1 is not None and phase1.status == "vacuous":
        summary = f"candidate fails the remainder condition at l={phase1.failing_l}"
        logger.info(f"❌ {summary}")
        return ExploreReport(**base, phase1=phase1, summary=summary, verdict=Outcome.REFUTED)

    logger.info(f"🚀 Searching {len(grid)} grid cell(s) up to order {max_order} on [0, {window}]")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(lambda b: _search_cell(candidate, b, max_order, window), grid))
    else:
        cells = [_search_cell(candidate, b, max_order, window) for b in tqdm(grid, disable=not progress)]

    found: Optional[GridCell] = next((c for c in cells if c.certificate is not None), None)
    if found is not None:
        summary = f"negative minor {found.certificate.value} for B = {found.b.type}"
        verdict = Outcome.REFUTED
    else:
        summary = "no counterexample within bounds"
        verdict = Outcome.INCONCLUSIVE
    logger.info(f"{'❌' if found else '⚠️'} {summary}")
    return ExploreReport(
        **base,
        phase1=phase1,
        phase1_note=note,
        phase2=cells,
        counterexample=found,
        summary=summary,
        verdict=verdict,
    )
