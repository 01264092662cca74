"""Binomial parity and truncated polynomial arithmetic over GF(2).

Polynomials live in GF(2)[x]/(x^T): the coefficients are the bits of a single
Python int (bit j = coefficient of x^j), and every exponent at or above the
truncation T is identically zero.  Addition is xor, multiplication is the
carry-less product with high exponents discarded.

The truncation travels with each value.  Combining values with different
truncations raises :class:`MismatchedTruncationError` instead of silently
re-truncating; the degree-1 and degree-2 generator families served by this
kernel must never be mixed by accident.

Binomial parity uses the bitwise subset test (Lucas' theorem at p = 2):
binom(n, r) is odd iff every binary digit of r is at most the matching digit
of n, i.e. ``r & n == r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MismatchedTruncationError, NonUnitError

__all__ = [
    "TruncatedGF2Poly",
    "binom_parity",
    "geometric_inverse_coefficient",
    "one_plus_x",
    "poly_inverse",
    "poly_mul",
    "poly_pow",
]


def binom_parity(n: int, r: int) -> bool:
    """True iff binom(n, r) is odd; r > n yields False (the coefficient is 0)."""
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return n & r == r


def geometric_inverse_coefficient(q: int, j: int) -> bool:
    """Parity of the x^j coefficient of (1+x)^(-q), i.e. of binom(q+j-1, q-1)."""
    if q < 1:
        raise ValueError("q must be positive")
    if j < 0:
        raise ValueError("j must be nonnegative")
    return binom_parity(q + j - 1, q - 1)


@dataclass(frozen=True)
class TruncatedGF2Poly:
    """Element of GF(2)[x]/(x^truncation); bit j of ``bits`` is the x^j coefficient."""

    bits: int
    truncation: int

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ValueError("truncation must be a positive integer")
        if self.bits < 0:
            raise ValueError("coefficient bits must be nonnegative")
        if self.bits >> self.truncation:
            raise ValueError(
                f"coefficient at exponent >= truncation {self.truncation}"
            )

    @classmethod
    def zero(cls, truncation: int) -> "TruncatedGF2Poly":
        return cls(0, truncation)

    @classmethod
    def one(cls, truncation: int) -> "TruncatedGF2Poly":
        return cls(1, truncation)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], truncation: int) -> "TruncatedGF2Poly":
        """Build from a set of exponents; exponents >= truncation reduce to 0."""
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if e < truncation:
                bits ^= 1 << e
        return cls(bits, truncation)

    @property
    def is_unit(self) -> bool:
        return bool(self.bits & 1)

    @property
    def degree(self) -> int:
        """Largest exponent with nonzero coefficient; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def coefficient(self, j: int) -> bool:
        """Coefficient of x^j (False for j >= truncation: x^j = 0 there)."""
        if j < 0:
            raise ValueError("exponent must be nonnegative")
        return bool((self.bits >> j) & 1)

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(j for j in range(self.bits.bit_length()) if (self.bits >> j) & 1)

    def __add__(self, other: "TruncatedGF2Poly") -> "TruncatedGF2Poly":
        if not isinstance(other, TruncatedGF2Poly):
            return NotImplemented
        _require_same_truncation(self, other)
        return TruncatedGF2Poly(self.bits ^ other.bits, self.truncation)

    def __mul__(self, other: "TruncatedGF2Poly") -> "TruncatedGF2Poly":
        if not isinstance(other, TruncatedGF2Poly):
            return NotImplemented
        return poly_mul(self, other)

    def __pow__(self, exponent: int) -> "TruncatedGF2Poly":
        return poly_pow(self, exponent)

    def inverse(self) -> "TruncatedGF2Poly":
        return poly_inverse(self)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for j in self.support():
            terms.append("1" if j == 0 else "x" if j == 1 else f"x^{j}")
        return " + ".join(terms)


def one_plus_x(truncation: int) -> TruncatedGF2Poly:
    """The polynomial 1 + x (just 1 when truncation is 1)."""
    return TruncatedGF2Poly.from_exponents((0, 1), truncation)


def _require_same_truncation(a: TruncatedGF2Poly, b: TruncatedGF2Poly) -> None:
    if a.truncation != b.truncation:
        raise MismatchedTruncationError(
            f"truncations differ: {a.truncation} != {b.truncation}"
        )


def _mul_bits(a: int, b: int, truncation: int) -> int:
    # Carry-less shift-and-xor product, reduced modulo x^truncation.
    mask = (1 << truncation) - 1
    acc = 0
    shift = 0
    while b:
        if b & 1:
            acc ^= a << shift
        b >>= 1
        shift += 1
    return acc & mask


def poly_mul(a: TruncatedGF2Poly, b: TruncatedGF2Poly) -> TruncatedGF2Poly:
    """Product in GF(2)[x]/(x^T); both operands must share the truncation T."""
    _require_same_truncation(a, b)
    return TruncatedGF2Poly(_mul_bits(a.bits, b.bits, a.truncation), a.truncation)


def poly_pow(a: TruncatedGF2Poly, exponent: int) -> TruncatedGF2Poly:
    """a raised to any integer power; negative powers invert first (unit required)."""
    if exponent < 0:
        return poly_pow(poly_inverse(a), -exponent)
    t = a.truncation
    result = 1
    base = a.bits
    e = exponent
    while e:
        if e & 1:
            result = _mul_bits(result, base, t)
        e >>= 1
        if e:
            base = _mul_bits(base, base, t)
    return TruncatedGF2Poly(result, t)


def poly_inverse(a: TruncatedGF2Poly) -> TruncatedGF2Poly:
    """Multiplicative inverse of a unit in GF(2)[x]/(x^T).

    Newton iteration with doubling precision: if b inverts a modulo x^m, then
    b + b*(a*b + 1) inverts a modulo x^(2m) (the error term squares away in
    characteristic 2).
    """
    if not a.is_unit:
        raise NonUnitError("constant term is 0; only units are invertible")
    t = a.truncation
    b = 1
    precision = 1
    while precision < t:
        precision = min(2 * precision, t)
        mask = (1 << precision) - 1
        error = _mul_bits(a.bits & mask, b, precision) ^ 1
        b ^= _mul_bits(b, error, precision)
    return TruncatedGF2Poly(b & ((1 << t) - 1), t)
