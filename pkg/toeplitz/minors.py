"""
minors.py
------------------------------------
Toeplitz minors of a materialized sequence and the windowed TP_m search.
------------------------------------
The matrix has entry (i, j) = a_{j-i}, zero below the band.  Two facts keep
the exhaustive search tractable without changing its outcome:

* the matrix is invariant under shifting rows and cols together, so every
  minor with rows in [0, N] is equal to one whose first row is 0;
* if cols[t] < rows[t + 1] the submatrix is block triangular and the minor
  is the product of two smaller minors that were already checked, and if
  cols[t] < rows[t] it has a zero block that forces the value 0.

Only the remaining ("indecomposable") minors are evaluated.  The first
negative one in (order, rows, cols) order is the same certificate a naive
enumeration of every index set would report.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from core.errors import DomainError, HorizonError
from core.logger import get_logger
from seqcore.schemas import CoefficientSequence
from toeplitz.determinant import determinant, integer_determinant
from toeplitz.schemas import MinorCertificate, MinorRequest, TPWitness, Verdict

logger = get_logger("toeplitz")

Index = Tuple[int, ...]


def toeplitz_matrix(seq: CoefficientSequence, rows: Sequence[int], cols: Sequence[int]) -> List[List[Fraction]]:
    return [[seq.at(c - r) for c in cols] for r in rows]


def minor(seq: CoefficientSequence, req: MinorRequest) -> Fraction:
    """Exact determinant of the submatrix with entries a_{col-row}."""
    top = max(max(req.rows), max(req.cols))
    if top > seq.horizon:
        raise HorizonError(f"Minor index {top} exceeds horizon {seq.horizon}")
    return determinant(toeplitz_matrix(seq, req.rows, req.cols))


class _ScaledWindow:
    """a_0..a_N as integer numerators over one common denominator."""

    def __init__(self, seq: CoefficientSequence, n_max: int):
        coeffs = [seq.at(k) for k in range(n_max + 1)]
        self.den = lcm(*(c.denominator for c in coeffs))
        self.nums = [int(c * self.den) for c in coeffs]

    def value(self, rows: Index, cols: Index) -> Fraction:
        mat = [[self.nums[c - r] if c >= r else 0 for c in cols] for r in rows]
        return Fraction(integer_determinant(mat), self.den ** len(rows))


def _column_sets(rows: Index, n_max: int) -> Iterator[Index]:
    k = len(rows)
    picked: List[int] = []

    def extend(t: int, lo: int) -> Iterator[Index]:
        if t == k:
            yield tuple(picked)
            return
        floor = max(lo, rows[t + 1] if t + 1 < k else rows[t])
        for c in range(floor, n_max - (k - 1 - t) + 1):
            picked.append(c)
            yield from extend(t + 1, c + 1)
            picked.pop()

    yield from extend(0, 0)


def indecomposable_minors(order: int, n_max: int) -> Iterator[Tuple[Index, Index]]:
    """(rows, cols) with rows[0] = 0 and cols[t] >= rows[t+1], lexicographically."""
    for tail in combinations(range(1, n_max + 1), order - 1):
        rows = (0,) + tail
        for cols in _column_sets(rows, n_max):
            yield rows, cols


def _check_bounds(seq: CoefficientSequence, max_order: int, n_max: int) -> None:
    if max_order < 1:
        raise DomainError(f"Order bound must be at least 1, got {max_order}")
    if n_max < 0:
        raise HorizonError(f"Window must be nonnegative, got {n_max}")
    if n_max > seq.horizon:
        raise HorizonError(f"Window {n_max} exceeds horizon {seq.horizon}")


def _search(seq: CoefficientSequence, max_order: int, n_max: int, progress: bool = False):
    window = _ScaledWindow(seq, n_max)
    smallest: Optional[Fraction] = None
    checked = 0
    orders = range(1, min(max_order, n_max + 1) + 1)
    for order in tqdm(orders, desc="orders", disable=not progress, leave=False):
        for rows, cols in indecomposable_minors(order, n_max):
            value = window.value(rows, cols)
            checked += 1
            if smallest is None or value < smallest:
                smallest = value
            if value < 0:
                cert = MinorCertificate(rows=list(rows), cols=list(cols), value=value)
                return cert, smallest, checked
        logger.debug(f"🔹 order {order}: {checked} minors evaluated so far")
    # rows {1}, cols {0} is an implicit zero whenever the window has two indices
    if n_max >= 1:
        smallest = min(smallest, Fraction(0))
    return None, smallest, checked


def check_tp_window(seq: CoefficientSequence, m: int, N: int, progress: bool = False) -> TPWitness:
    """All minors of order <= m with indices in [0, N] are nonnegative?"""
    _check_bounds(seq, m, N)
    logger.info(f"🚀 TP_{m} check on window [0, {N}]")
    cert, smallest, checked = _search(seq, m, N, progress)
    if cert is not None:
        logger.info(f"❌ Negative minor {cert.value} at rows={cert.rows} cols={cert.cols}")
        verdict = Verdict.FAIL
    else:
        logger.info(f"✅ All minors nonnegative ({checked} evaluated)")
        verdict = Verdict.PASS
    return TPWitness(
        order_bound=m,
        window=N,
        verdict=verdict,
        failing=cert,
        min_value=smallest,
        minors_checked=checked,
    )


def find_negative_minor(seq: CoefficientSequence, max_order: int, N: int, progress: bool = False) -> Optional[MinorCertificate]:
    """First negative minor within bounds; None is inconclusive, not a TP proof."""
    _check_bounds(seq, max_order, N)
    cert, _, checked = _search(seq, max_order, N, progress)
    if cert is None:
        logger.info(f"⚠️ No negative minor up to order {max_order} on [0, {N}] ({checked} evaluated)")
    return cert


def contiguous_prescreen(seq: CoefficientSequence, m: int, N: int) -> Optional[MinorCertificate]:
    """First negative minor with consecutive rows and cols. Never proves a pass."""
    _check_bounds(seq, m, N)
    window = _ScaledWindow(seq, N)
    for order in range(1, min(m, N + 1) + 1):
        rows = tuple(range(order))
        for start in range(0, N - order + 2):
            cols = tuple(range(start, start + order))
            value = window.value(rows, cols)
            if value < 0:
                return MinorCertificate(rows=list(rows), cols=list(cols), value=value)
    return None
