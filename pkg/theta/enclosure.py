# theta/enclosure.py
# Interval plumbing over mpmath.iv. Rational inputs stay exact Fractions;
# anything irrational is an mpmath interval computed at a locked precision.

import threading
from contextlib import contextmanager
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from typing import Any, Iterator, Optional, Tuple, Union

from mpmath import iv, libmp

from core.errors import DomainError
from theta.schemas import Enclosure

DIGITS = 30

# iv.prec is process-global
_PRECISION_LOCK = threading.RLock()

Value = Union[Fraction, Any]


@contextmanager
def working_precision(bits: int) -> Iterator[None]:
    with _PRECISION_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            yield
        finally:
            iv.prec = saved


def is_exact(x: Value) -> bool:
    return isinstance(x, (Fraction, int))


def lift(x: Value):
    """Fraction -> enclosing interval (numerator and denominator rounded outward)."""
    if is_exact(x):
        x = Fraction(x)
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    return x


def sqrt(x: Fraction):
    if x < 0:
        raise ValueError(f"sqrt of negative rational {x}")
    return iv.sqrt(lift(x))


def _endpoint(raw) -> Fraction:
    # raw mpf tuple (sign, mantissa, exponent, bitcount); the mantissa may be an mpz
    if raw in (libmp.finf, libmp.fninf, libmp.fnan):
        raise DomainError("Enclosure endpoint is not finite")
    sign, man, exp, _ = raw
    value = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -value if sign else value


def bounds(x: Value) -> Tuple[Fraction, Fraction]:
    """Exact rational lower and upper bounds."""
    if is_exact(x):
        x = Fraction(x)
        return x, x
    lo, hi = x._mpi_
    return _endpoint(lo), _endpoint(hi)


def sign_of(x: Value) -> Optional[int]:
    """+1 / -1 when certain, 0 for an exact zero, None when the enclosure straddles 0."""
    lo, hi = bounds(x)
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == hi == 0:
        return 0
    return None


def certainly_less(x: Value, y: Value) -> bool:
    return bounds(x)[1] < bounds(y)[0]


def _decimal(value: Fraction, rounding: str) -> str:
    with localcontext() as ctx:
        ctx.prec = DIGITS
        ctx.rounding = rounding
        return str(Decimal(int(value.numerator)) / Decimal(int(value.denominator)))


def enclose(x: Value) -> Enclosure:
    lo, hi = bounds(x)
    return Enclosure(lo=_decimal(lo, ROUND_FLOOR), hi=_decimal(hi, ROUND_CEILING))


def exact_or_none(x: Value) -> Optional[Fraction]:
    return Fraction(x) if is_exact(x) else None
