# core/sampling.py
# Seeded generators of exact rational data for property suites and the
# exploration grid.

from fractions import Fraction
from typing import List

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, lo: Fraction, hi: Fraction, max_den: int = 12) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator at most max_den."""
    den = int(rng.integers(1, max_den + 1))
    lo_num = -((-lo.numerator * den) // lo.denominator)  # ceil(lo*den)
    hi_num = (hi.numerator * den) // hi.denominator      # floor(hi*den)
    if hi_num < lo_num:
        return lo
    return Fraction(int(rng.integers(lo_num, hi_num + 1)), den)


def random_quotients(rng: np.random.Generator, count: int, lo: Fraction = Fraction(4), hi: Fraction = Fraction(10)) -> List[Fraction]:
    """Second quotients q_2..q_{count+1} drawn from [lo, hi]."""
    return [random_rational(rng, lo, hi) for _ in range(count)]


def random_nonnegative_roots(rng: np.random.Generator, count: int, max_value: int = 5) -> List[Fraction]:
    """Values r_i >= 0 for products of (1 + r_i z)."""
    return [random_rational(rng, Fraction(0), Fraction(max_value), max_den=6) for _ in range(count)]
