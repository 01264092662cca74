"""Additive mod-2 cohomology presentations for Stiefel manifolds and quotients.

Five families are supported, each parametrized by integers (n, k):

* ``V``  real Stiefel manifold of orthonormal k-frames in R^n,
* ``W``  complex Stiefel manifold of orthonormal k-frames in C^n,
* ``PV`` quotient of V by the antipodal action (+-1 on every vector),
* ``PW`` quotient of W by the diagonal circle action,
* ``Y``  quotient of V_{n,2k} by the diagonal SO(2) inside SO(2k).

H^*(-; Z_2) of each space is, additively, an exterior algebra on a known set
of generator degrees, tensored for the quotient families with a truncated
polynomial algebra Z_2[x]/(x^T) on the mod-2 Euler class x of the canonical
line bundle (|x| = 1 over PV, |x| = 2 over PW and Y).  The truncation
exponent is the first power of x killed by a transgression, which is where
the binomial parities enter.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    InternalInconsistencyError,
    InvalidManifoldError,
    NoPolynomialPartError,
)
from .gf2 import binom_parity

__all__ = [
    "CohomologyPresentation",
    "Family",
    "ManifoldId",
    "betti_numbers",
    "charrank_of_canonical_bundle",
    "circle_cutoff",
    "iter_manifolds",
    "manifold_dim",
    "presentation",
    "projective_cutoff",
    "valid_k_range",
]

# Betti expansions switch from int64 vectors to exact Python ints above this
# total rank; int64 would overflow.
_INT64_SAFE_RANK = 1 << 62


class Family(str, Enum):
    """Manifold family tag."""

    V = "V"
    W = "W"
    PV = "PV"
    PW = "PW"
    Y = "Y"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ManifoldId:
    """A family tag plus parameters (n, k), validated on construction.

    Constraints: 1 <= k < n for V, W, PV, PW; 1 <= k and n > 2k for Y.
    """

    family: Family
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidManifoldError(f"{self.family} requires k >= 1")
        if self.family is Family.Y:
            if self.n <= 2 * self.k:
                raise InvalidManifoldError("Y requires n > 2k")
        elif self.k >= self.n:
            raise InvalidManifoldError(f"{self.family} requires k < n")

    @property
    def label(self) -> str:
        return f"{self.family.value}_{{{self.n},{self.k}}}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class CohomologyPresentation:
    """Additive model of H^*(M; Z_2).

    ``exterior_degrees`` are the degrees of the surviving exterior generators;
    ``poly_degree`` is the cohomological degree of the polynomial generator x
    (0 when there is none, for V and W, in which case ``truncation_exponent``
    is 1); ``excluded_degree`` is the degree of the exterior generator removed
    by the first transgression (None for V and W).
    """

    exterior_degrees: tuple[int, ...]
    poly_degree: int
    truncation_exponent: int
    excluded_degree: int | None
    manifold_dim: int

    @property
    def total_rank(self) -> int:
        """Total Z_2 dimension: 2^(number of exterior generators) * truncation."""
        return (1 << len(self.exterior_degrees)) * self.truncation_exponent

    @property
    def top_degree(self) -> int:
        return sum(self.exterior_degrees) + self.poly_degree * (
            self.truncation_exponent - 1
        )


def valid_k_range(family: Family, n: int) -> range:
    """All k making (family, n, k) a valid manifold (may be empty)."""
    if family is Family.Y:
        return range(1, (n - 1) // 2 + 1)
    return range(1, n)


def iter_manifolds(
    max_n: int, families: Iterable[Family] = tuple(Family)
) -> Iterator[ManifoldId]:
    """All valid ids with n <= max_n, ordered family-major, then n, then k."""
    for family in families:
        for n in range(2, max_n + 1):
            for k in valid_k_range(family, n):
                yield ManifoldId(family, n, k)


def manifold_dim(mid: ManifoldId) -> int:
    """Real dimension of the manifold."""
    n, k = mid.n, mid.k
    if mid.family is Family.V:
        return n * k - k * (k + 1) // 2
    if mid.family is Family.W:
        return 2 * n * k - k * k
    if mid.family is Family.PV:
        return n * k - k * (k + 1) // 2
    if mid.family is Family.PW:
        return 2 * n * k - k * k - 1
    return 2 * n * k - k * (2 * k + 1) - 1


def projective_cutoff(n: int, k: int) -> int:
    """Truncation exponent of x over PV_{n,k} and PW_{n,k}.

    The least j with n-k < j <= n and binom(n, j) odd; j = n always qualifies.
    """
    if not 1 <= k < n:
        raise InvalidManifoldError("projective cutoff requires 1 <= k < n")
    for j in range(n - k + 1, n + 1):
        if binom_parity(n, j):
            return j
    raise InternalInconsistencyError(
        f"no odd binomial in ({n - k}, {n}]; binom(n, n) = 1 should qualify"
    )


def circle_cutoff(n: int, k: int) -> int:
    """Truncation exponent J of x over Y_{n,k}.

    J is the least r such that binom(k+r-1, k-1) is odd and the transgressing
    exterior generator of degree 2r-1 exists, i.e. n-2k <= 2r-1 <= n-1.  That
    window contains exactly k integers r and always holds an odd coefficient
    (consecutive even runs of (1+x)^(-k) are shorter than k), so a failed
    search signals window arithmetic gone wrong, not a data condition.
    """
    if k < 1 or n <= 2 * k:
        raise InvalidManifoldError("circle cutoff requires 1 <= 2k < n")
    lo = (n - 2 * k + 2) // 2  # least r with 2r-1 >= n-2k
    hi = n // 2  # greatest r with 2r-1 <= n-1
    for r in range(lo, hi + 1):
        if binom_parity(k + r - 1, k - 1):
            return r
    raise InternalInconsistencyError(
        f"no odd coefficient of (1+x)^(-{k}) for r in [{lo}, {hi}]"
    )


def _remove_excluded(degrees: list[int], excluded: int) -> tuple[int, ...]:
    if excluded not in degrees:
        raise InternalInconsistencyError(
            f"excluded generator degree {excluded} not among {degrees}"
        )
    return tuple(d for d in degrees if d != excluded)


def presentation(mid: ManifoldId) -> CohomologyPresentation:
    """Additive presentation of H^*(M; Z_2) for the given manifold."""
    n, k = mid.n, mid.k
    dim = manifold_dim(mid)
    if mid.family is Family.V:
        result = CohomologyPresentation(
            tuple(range(n - k, n)), 0, 1, None, dim
        )
    elif mid.family is Family.W:
        result = CohomologyPresentation(
            tuple(2 * j - 1 for j in range(n - k + 1, n + 1)), 0, 1, None, dim
        )
    elif mid.family is Family.PV:
        cutoff = projective_cutoff(n, k)
        ext = _remove_excluded(list(range(n - k, n)), cutoff - 1)
        result = CohomologyPresentation(ext, 1, cutoff, cutoff - 1, dim)
    elif mid.family is Family.PW:
        # The generator killed by the transgression is the one of degree
        # 2*cutoff - 1 (i.e. y_cutoff): with |x| = 2 that is the only choice
        # giving top degree == dim and Poincare duality.  See README for the
        # y_{cutoff-1} variant and the duality check that rules it out.
        cutoff = projective_cutoff(n, k)
        ext = _remove_excluded(
            [2 * j - 1 for j in range(n - k + 1, n + 1)], 2 * cutoff - 1
        )
        result = CohomologyPresentation(ext, 2, cutoff, 2 * cutoff - 1, dim)
    else:
        cutoff = circle_cutoff(n, k)
        ext = _remove_excluded(list(range(n - 2 * k, n)), 2 * cutoff - 1)
        result = CohomologyPresentation(ext, 2, cutoff, 2 * cutoff - 1, dim)
    if result.top_degree != dim:
        raise InternalInconsistencyError(
            f"top degree {result.top_degree} != dim {dim} for {mid.label}"
        )
    return result


def betti_numbers(p: CohomologyPresentation) -> list[int]:
    """Z_2 Betti numbers b_0 .. b_dim, by expanding the Poincare product.

    The Poincare polynomial is prod(1 + t^d) over the exterior degrees times
    the truncated geometric series 1 + t^c + ... + t^(c*(T-1)).
    """
    dim = p.manifold_dim
    if p.total_rank < _INT64_SAFE_RANK:
        coeffs = np.zeros(dim + 1, dtype=np.int64)
        coeffs[0] = 1
        for d in p.exterior_degrees:
            if d > dim:
                continue
            coeffs[d:] += coeffs[: dim + 1 - d].copy()
        if p.poly_degree:
            base = coeffs.copy()
            for q in range(1, p.truncation_exponent):
                shift = p.poly_degree * q
                if shift > dim:
                    break
                coeffs[shift:] += base[: dim + 1 - shift]
        return [int(v) for v in coeffs]
    # Exact fallback for astronomically large ranks.
    coeffs = [0] * (dim + 1)
    coeffs[0] = 1
    for d in p.exterior_degrees:
        for i in range(dim - d, -1, -1):
            coeffs[i + d] += coeffs[i]
    if p.poly_degree:
        base = list(coeffs)
        for q in range(1, p.truncation_exponent):
            shift = p.poly_degree * q
            if shift > dim:
                break
            for i in range(dim + 1 - shift):
                coeffs[i + shift] += base[i]
    return coeffs


def charrank_of_canonical_bundle(p: CohomologyPresentation) -> int:
    """Largest degree below which every class is a polynomial in x.

    With the monomial basis this is exact: degrees below the first exterior
    generator are spanned by powers of x (or vanish), so the answer is
    min(exterior_degrees) - 1, or the full dimension when no exterior
    generator survives.
    """
    if p.poly_degree == 0:
        raise NoPolynomialPartError(
            "characteristic rank of the canonical bundle needs a polynomial part"
        )
    if not p.exterior_degrees:
        return p.manifold_dim
    return min(p.exterior_degrees) - 1
