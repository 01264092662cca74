"""Independent brute-force cross-checks for the fast paths.

Everything here is deliberately naive and shares no helper code with the
modules it checks: parity comes from an additive Pascal triangle instead of
the bitwise subset test, inverses from degree-by-degree back-substitution
instead of Newton iteration, and Betti numbers from explicit monomial
enumeration or a separately written expansion.  Sharing code would make the
cross-checks vacuous.

The enumerative oracles carry configurable ceilings and raise
:class:`LimitExceededError` beyond them: oracle silence must never be
mistaken for oracle agreement.
"""

from __future__ import annotations

import numpy as np

from .cohomology import CohomologyPresentation
from .errors import LimitExceededError, NonUnitError
from .gf2 import TruncatedGF2Poly

__all__ = [
    "DEFAULT_BASIS_CEILING",
    "DEFAULT_TRIANGLE_MAX",
    "ParityTriangle",
    "check_duality",
    "enumerate_basis",
    "naive_inverse",
    "pascal_parity",
]

DEFAULT_TRIANGLE_MAX = 4096
DEFAULT_BASIS_CEILING = 1 << 20

_INT64_SAFE_RANK = 1 << 62


class ParityTriangle:
    """Pascal's triangle mod 2, built additively row by row.

    Row n is stored as an int whose bit r is the parity of binom(n, r); each
    row is the previous one xor-ed with its shift, which is exactly the
    Pascal recurrence in characteristic 2.  Rows are grown lazily up to
    ``max_n``.
    """

    def __init__(self, max_n: int = DEFAULT_TRIANGLE_MAX) -> None:
        if max_n < 0:
            raise ValueError("max_n must be nonnegative")
        self.max_n = max_n
        self._rows: list[int] = [1]

    def parity(self, n: int, r: int) -> bool:
        """Parity of binom(n, r); r > n gives False."""
        if n < 0 or r < 0:
            raise ValueError("binomial arguments must be nonnegative")
        if n > self.max_n:
            raise LimitExceededError(
                f"parity triangle is capped at n = {self.max_n}, got {n}"
            )
        if r > n:
            return False
        while len(self._rows) <= n:
            prev = self._rows[-1]
            self._rows.append(prev ^ (prev << 1))
        return bool((self._rows[n] >> r) & 1)


_default_triangle = ParityTriangle()


def pascal_parity(n: int, r: int, triangle: ParityTriangle | None = None) -> bool:
    """Parity of binom(n, r) from the additive triangle (default cap 4096)."""
    return (triangle or _default_triangle).parity(n, r)


def naive_inverse(a: TruncatedGF2Poly) -> TruncatedGF2Poly:
    """Inverse of a unit by degree-by-degree back-substitution.

    b_0 = 1 and b_j = sum over i >= 1 of a_i * b_(j-i), everything mod 2.
    """
    if not a.bits & 1:
        raise NonUnitError("constant term is 0; only units are invertible")
    t = a.truncation
    ones = [i for i in range(1, t) if (a.bits >> i) & 1]
    b = [0] * t
    b[0] = 1
    for j in range(1, t):
        s = 0
        for i in ones:
            if i > j:
                break
            s ^= b[j - i]
        b[j] = s
    bits = 0
    for j in range(t):
        bits |= b[j] << j
    return TruncatedGF2Poly(bits, t)


def enumerate_basis(
    p: CohomologyPresentation, ceiling: int = DEFAULT_BASIS_CEILING
) -> list[tuple[int, tuple[int, tuple[int, ...]]]]:
    """Every monomial x^i * prod(y_d for d in S), as (degree, descriptor).

    The descriptor is (i, S) with S the tuple of exterior degrees used.
    Raises LimitExceededError when 2^g * truncation exceeds the ceiling.
    """
    if p.total_rank > ceiling:
        raise LimitExceededError(
            f"basis has {p.total_rank} monomials, above the ceiling {ceiling}"
        )
    degrees = p.exterior_degrees
    subsets: list[tuple[int, ...]] = [()] * (1 << len(degrees))
    subset_degree = [0] * (1 << len(degrees))
    step = p.poly_degree
    powers = range(p.truncation_exponent)
    out = []
    for mask in range(1 << len(degrees)):
        if mask:
            low = degrees[(mask & -mask).bit_length() - 1]
            rest = mask & (mask - 1)
            subsets[mask] = (low,) + subsets[rest]
            subset_degree[mask] = low + subset_degree[rest]
        base = subset_degree[mask]
        chosen = subsets[mask]
        for i in powers:
            out.append((base + step * i, (i, chosen)))
    return out


def _poincare_coefficients(p: CohomologyPresentation) -> list[int]:
    # Full (untruncated) coefficient list of the Poincare product, so that a
    # top degree disagreeing with manifold_dim is visible rather than cut off.
    if p.total_rank < _INT64_SAFE_RANK:
        arr = np.array([1], dtype=np.int64)
        for d in p.exterior_degrees:
            grown = np.zeros(arr.size + d, dtype=np.int64)
            grown[: arr.size] += arr
            grown[d:] += arr
            arr = grown
        if p.poly_degree:
            step = p.poly_degree
            grown = np.zeros(arr.size + step * (p.truncation_exponent - 1), dtype=np.int64)
            for q in range(p.truncation_exponent):
                grown[step * q : step * q + arr.size] += arr
            arr = grown
        return [int(v) for v in arr]
    coeffs = [1]
    for d in p.exterior_degrees:
        grown = [0] * (len(coeffs) + d)
        for i, c in enumerate(coeffs):
            grown[i] += c
            grown[i + d] += c
        coeffs = grown
    if p.poly_degree:
        step = p.poly_degree
        grown = [0] * (len(coeffs) + step * (p.truncation_exponent - 1))
        for q in range(p.truncation_exponent):
            for i, c in enumerate(coeffs):
                grown[step * q + i] += c
        coeffs = grown
    return coeffs


def check_duality(p: CohomologyPresentation) -> int | None:
    """Poincare-duality check: None on pass, else the first offending degree.

    Passes iff the Poincare product tops out exactly at ``manifold_dim`` and
    its coefficients satisfy b_i == b_(dim - i) throughout.  Any failure on a
    validly constructed manifold presentation is a release-blocking bug.
    """
    coeffs = _poincare_coefficients(p)
    top = len(coeffs) - 1
    dim = p.manifold_dim
    if top != dim:
        return top
    for i in range(dim + 1):
        if coeffs[i] != coeffs[dim - i]:
            return i
    return None
