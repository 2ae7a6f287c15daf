"""
polynomial.py
------------------------------------
Dense univariate polynomials over the rationals.
------------------------------------
Coefficients are stored lowest degree first as Fractions. Trailing zeros are
stripped on construction, so the zero polynomial has no coefficients and
degree -1.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Tuple, Union

from core.errors import DomainError

Scalar = Union[Fraction, int]


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    # ==========================================================
    # 🔹 Constructors
    # ==========================================================
    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_linear_factors(cls, rs: Iterable[Scalar], c: Scalar = 1) -> "Polynomial":
        """c * prod(1 + r z)."""
        p = cls.constant(c)
        for r in rs:
            p = p * cls([1, r])
        return p

    @classmethod
    def from_exponential_weights(cls, gammas: Sequence[Scalar]) -> "Polynomial":
        """sum gamma_k z^k / k!"""
        return cls(Fraction(g) / factorial(k) for k, g in enumerate(gammas))

    # ==========================================================
    # 🔹 Basic properties
    # ==========================================================
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def lowest_degree(self) -> int:
        """Multiplicity of the root at zero."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        raise DomainError("Zero polynomial has no lowest term")

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    # ==========================================================
    # 🔹 Ring operations
    # ==========================================================
    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-_lift(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _lift(other) - self

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            shift = len(rem) - 1 - d
            factor = rem[-1] / lc
            quot[shift] = factor
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= factor * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise DomainError(f"{other!r} does not divide {self!r}")
        return q

    # ==========================================================
    # 🔹 Calculus and transforms
    # ==========================================================
    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (Euclid over Q)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def scale(self, c: Scalar) -> "Polynomial":
        """p(c z)"""
        c = Fraction(c)
        out: List[Fraction] = []
        power = Fraction(1)
        for coeff in self.coeffs:
            out.append(coeff * power)
            power *= c
        return Polynomial(out)

    def reflect(self) -> "Polynomial":
        """p(-z)"""
        return self.scale(-1)

    def shift_down(self, l: int) -> "Polynomial":
        """Divide by z^l, dropping the l lowest coefficients."""
        return Polynomial(self.coeffs[l:])

    def truncate(self, degree: int) -> "Polynomial":
        return Polynomial(self.coeffs[: degree + 1])

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]


def _lift(value: Union[Polynomial, Scalar]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)
