"""Stiefel-Whitney and first-Pontryagin data for the tangent bundles of PV and Y.

For both families the total Stiefel-Whitney class of the tangent bundle is
(1 + x)^(n*k) in Z_2[x]/(x^T), where x is the mod-2 Euler class of the
canonical line bundle and T the presentation's truncation exponent.  The
inverse (dual) class is therefore (1 + x)^(-n*k), whose x^j coefficient has
the closed form binom(nk+j-1, nk-1) mod 2; the library computes it both ways
and the test suite insists the two agree.

No tangent Stiefel-Whitney formula is provided for PW (none is on record for
its tangent bundle), and V, W carry no canonical-class data at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import Family, ManifoldId, circle_cutoff, projective_cutoff
from .errors import UnsupportedFamilyError
from .gf2 import (
    TruncatedGF2Poly,
    geometric_inverse_coefficient,
    one_plus_x,
    poly_inverse,
    poly_pow,
)

__all__ = [
    "CharClassReport",
    "char_class_report",
    "dual_top_index",
    "inverse_sw",
    "p1_coefficient",
    "total_sw",
]


@dataclass(frozen=True)
class CharClassReport:
    """Characteristic-class summary for one PV or Y manifold.

    Polynomials are in x; a term x^j sits in cohomological degree
    j * poly_degree.  ``m`` is the largest exponent with nonzero inverse
    class, so the top nonvanishing dual class lives in degree
    ``dual_top_cohomological_degree`` = m * poly_degree.  The Pontryagin data
    (Y only) is the integer c with p_1(TY) = c * x0^2, plus the flag saying
    whether x0^2 is known nonzero (n - 2k >= 4).
    """

    manifold: ManifoldId
    poly_degree: int
    truncation: int
    total_sw: TruncatedGF2Poly
    inverse_sw: TruncatedGF2Poly
    m: int
    dual_top_cohomological_degree: int
    p1_coefficient: int | None = None
    euler_square_nonzero: bool | None = None


def _x_truncation(mid: ManifoldId) -> int:
    if mid.family is Family.PV:
        return projective_cutoff(mid.n, mid.k)
    if mid.family is Family.Y:
        return circle_cutoff(mid.n, mid.k)
    if mid.family is Family.PW:
        raise UnsupportedFamilyError("no tangent Stiefel-Whitney formula for PW")
    raise UnsupportedFamilyError(
        f"tangent class reports cover PV and Y only, not {mid.family}"
    )


def total_sw(mid: ManifoldId) -> TruncatedGF2Poly:
    """Total Stiefel-Whitney class of the tangent bundle: (1+x)^(n*k)."""
    t = _x_truncation(mid)
    return poly_pow(one_plus_x(t), mid.n * mid.k)


def inverse_sw(mid: ManifoldId) -> TruncatedGF2Poly:
    """Inverse (dual) Stiefel-Whitney class: (1+x)^(-n*k)."""
    return poly_inverse(total_sw(mid))


def dual_top_index(mid: ManifoldId) -> int:
    """Largest j below the truncation with binom(nk+j-1, nk-1) odd.

    Computed from the closed-form coefficients, independently of
    :func:`inverse_sw`; j = 0 always qualifies.
    """
    t = _x_truncation(mid)
    q = mid.n * mid.k
    for j in range(t - 1, 0, -1):
        if geometric_inverse_coefficient(q, j):
            return j
    return 0


def p1_coefficient(mid: ManifoldId) -> int:
    """Integer c with p_1(TY_{n,k}) = c * x0^2, namely nk - 2k^2 - 2k."""
    if mid.family is not Family.Y:
        raise UnsupportedFamilyError("first Pontryagin coefficient is defined for Y only")
    n, k = mid.n, mid.k
    return n * k - 2 * k * k - 2 * k


def char_class_report(mid: ManifoldId) -> CharClassReport:
    """Assemble the full characteristic-class report for a PV or Y manifold."""
    w = total_sw(mid)
    wbar = poly_inverse(w)
    m = dual_top_index(mid)
    poly_degree = 1 if mid.family is Family.PV else 2
    if mid.family is Family.Y:
        p1 = p1_coefficient(mid)
        euler_sq = mid.n - 2 * mid.k >= 4
    else:
        p1 = None
        euler_sq = None
    return CharClassReport(
        manifold=mid,
        poly_degree=poly_degree,
        truncation=w.truncation,
        total_sw=w,
        inverse_sw=wbar,
        m=m,
        dual_top_cohomological_degree=m * poly_degree,
        p1_coefficient=p1,
        euler_square_nonzero=euler_sq,
    )
