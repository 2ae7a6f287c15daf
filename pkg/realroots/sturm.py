"""
sturm.py
------------------------------------
Exact real-root counting with Sturm chains.
------------------------------------
The chain is computed over Z. The input and its derivative are made
primitive; later members are pseudo-remainders divided by the subresultant
factor, with signs fixed so that every member is a positive multiple of the
Euclidean Sturm remainder. Sign variations, and therefore root counts, are
unchanged by positive scalings.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from core.errors import DomainError
from realroots.polynomial import Polynomial

IntPoly = List[int]
Bound = Optional[Fraction]  # None stands for -inf (lower) or +inf (upper)


# ==========================================================
# 🔹 Integer helpers
# ==========================================================
def primitive_part(coeffs: Sequence[Fraction]) -> IntPoly:
    """Integer polynomial that is a positive multiple of the input."""
    if not coeffs:
        return []
    den = lcm(*(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * den) for c in coeffs]
    content = gcd(*ints)
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _strip(p: IntPoly) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _make_primitive(p: IntPoly) -> IntPoly:
    content = gcd(*p) if p else 0
    if content > 1:
        return [c // content for c in p]
    return p


def _derivative(p: IntPoly) -> IntPoly:
    return _make_primitive(_strip([k * c for k, c in enumerate(p) if k > 0]))


def _pseudo_remainder(p: IntPoly, q: IntPoly) -> IntPoly:
    """lc(q)^(deg p - deg q + 1) * p mod q."""
    n = len(q) - 1
    lc = q[-1]
    rem = list(p)
    for shift in range(len(p) - 1 - n, -1, -1):
        lead = rem[n + shift]
        rem = [lc * c for c in rem]
        if lead:
            for j, b in enumerate(q):
                rem[shift + j] -= lead * b
    return _strip(rem[:n])


def sturm_chain(p: Polynomial) -> List[IntPoly]:
    if p.is_zero:
        raise DomainError("Sturm chain of the zero polynomial is undefined")
    first = primitive_part(p.coeffs)
    chain = [first]
    if len(first) == 1:
        return chain
    chain.append(_derivative(first))
    # subresultant recurrence: g * h^delta divides every pseudo-remainder exactly
    g = h = 1
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        delta = len(a) - len(b)
        rem = _pseudo_remainder(a, b)
        if not rem:
            break
        # lc(b)^(delta+1) is negative only for negative lc(b) and even delta
        sign = -1 if (b[-1] < 0 and delta % 2 == 0) else 1
        divisor = g * h ** delta
        chain.append([(-sign * c) // divisor for c in rem])
        g = abs(b[-1])
        h = g ** delta // h ** (delta - 1)
    return chain


# ==========================================================
# 🔹 Sign evaluation
# ==========================================================
def sign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x) using the homogenised integer form."""
    num, den = x.numerator, x.denominator
    d = len(p) - 1
    acc = 0
    num_power = 1
    den_powers = [1] * (d + 1)
    for k in range(1, d + 1):
        den_powers[k] = den_powers[k - 1] * den
    for k, c in enumerate(p):
        if c:
            acc += c * num_power * den_powers[d - k]
        num_power *= num
    return (acc > 0) - (acc < 0)


def sign_at_infinity(p: IntPoly, positive: bool) -> int:
    lead = 1 if p[-1] > 0 else -1
    if positive or (len(p) - 1) % 2 == 0:
        return lead
    return -lead


def variations(chain: Sequence[IntPoly], x: Bound, at_upper: bool) -> int:
    signs = []
    for member in chain:
        s = sign_at_infinity(member, at_upper) if x is None else sign_at(member, x)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ==========================================================
# 🔹 Root counting
# ==========================================================
def _check_bounds(lo: Bound, hi: Bound) -> None:
    if lo is not None and hi is not None and lo > hi:
        raise DomainError(f"Empty interval ({lo}, {hi}]")


def distinct_roots_from_chain(chain: Sequence[IntPoly], lo: Bound = None, hi: Bound = None) -> int:
    _check_bounds(lo, hi)
    if lo is not None and hi is not None and lo == hi:
        return 0
    return variations(chain, lo, at_upper=False) - variations(chain, hi, at_upper=True)


def sturm_count(p: Polynomial, lo: Bound = None, hi: Bound = None) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    chain = sturm_chain(p)
    if not is_squarefree_chain(chain):
        # an endpoint on a repeated root would zero the whole chain
        chain = sturm_chain(p.exact_div(p.gcd(p.derivative())))
    return distinct_roots_from_chain(chain, lo, hi)


def is_squarefree_chain(chain: Sequence[IntPoly]) -> bool:
    """The last chain member is gcd(p, p') up to a constant."""
    return len(chain[-1]) == 1


def squarefree_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Yun's algorithm: p = c * prod f_i^i with squarefree, coprime f_i."""
    if p.is_zero:
        raise DomainError("Squarefree decomposition of the zero polynomial is undefined")
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = p.gcd(dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    factors: List[Tuple[Polynomial, int]] = []
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            factors.append((a, i))
        i += 1
    return factors


def root_count(p: Polynomial, lo: Bound = None, hi: Bound = None) -> int:
    """Number of real roots of p in (lo, hi], counted with multiplicity."""
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    chain = sturm_chain(p)
    if is_squarefree_chain(chain):
        return distinct_roots_from_chain(chain, lo, hi)
    return sum(mult * sturm_count(factor, lo, hi) for factor, mult in squarefree_decomposition(p))


def squarefree_defect(p: Polynomial) -> int:
    """deg p minus the degree of its squarefree part."""
    if p.degree < 1:
        return 0
    return p.degree - sum(factor.degree for factor, _ in squarefree_decomposition(p))


def cauchy_bound(p: Polynomial) -> Fraction:
    """Every root has absolute value below 1 + max |c_k / c_n|."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
