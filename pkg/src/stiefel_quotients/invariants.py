"""Derived geometric invariants: skew-embedding and immersion bounds, stable
span, upper characteristic rank, and parallelizability verdicts.

Every verdict carries an explicit applicability status.  The theorem guards
are encoded exactly as proved (for ucharrank: n-k, resp. n-2k, equal to 5, 6,
or at least 9, plus one resolved boundary case for PV at n-k = 1); parameters
outside a guard report ``OutOfTheoremRange`` rather than an extrapolated
number.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .charclasses import dual_top_index, p1_coefficient
from .cohomology import Family, ManifoldId, manifold_dim
from .errors import InternalInconsistencyError, UnsupportedFamilyError
from .gf2 import binom_parity

__all__ = [
    "NOT_PARALLELIZABLE",
    "InvariantReport",
    "Verdict",
    "VerdictStatus",
    "full_report",
    "non_immersion",
    "parallelizable",
    "skew_lower_bound_from_dual_index",
    "skew_report",
    "stable_span_upper",
    "ucharrank",
]

# Verdict.value for a Determined parallelizability verdict: 0 encodes
# "not parallelizable" (no positive case is ever provable here).
NOT_PARALLELIZABLE = 0


class VerdictStatus(str, Enum):
    DETERMINED = "Determined"
    OUT_OF_THEOREM_RANGE = "OutOfTheoremRange"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """A theorem verdict: status, value (Determined only), and the rule applied."""

    status: VerdictStatus
    value: int | None
    rule: str

    def __post_init__(self) -> None:
        if (self.value is not None) != (self.status is VerdictStatus.DETERMINED):
            raise ValueError("value must be present exactly when status is Determined")

    @classmethod
    def determined(cls, value: int, rule: str) -> "Verdict":
        return cls(VerdictStatus.DETERMINED, value, rule)

    @classmethod
    def out_of_theorem_range(cls, rule: str) -> "Verdict":
        return cls(VerdictStatus.OUT_OF_THEOREM_RANGE, None, rule)

    @classmethod
    def unknown(cls, rule: str) -> "Verdict":
        return cls(VerdictStatus.UNKNOWN, None, rule)


@dataclass(frozen=True)
class InvariantReport:
    """All applicable numerical conclusions for one manifold.

    Fields that do not apply to the family are None, never zero-filled:
    skew/immersion bounds need a tangent Stiefel-Whitney formula (PV, Y),
    stable span and parallelizability are Y-only, ucharrank covers PV, PW, Y.
    """

    manifold: ManifoldId
    dim: int
    skew_embed_lower_bound: int | None = None
    non_immersion_dim: int | None = None
    stable_span_upper_bound: int | None = None
    ucharrank: Verdict | None = None
    parallelizable: Verdict | None = None


def skew_lower_bound_from_dual_index(dim: int, kmax: int) -> int:
    """Lower bound 2*dim + 2*kmax + 1 for the least totally skew embedding
    dimension, from a nonzero dual class in cohomological degree kmax."""
    return 2 * dim + 2 * kmax + 1


def _dual_top_cohomological_degree(mid: ManifoldId) -> int:
    m = dual_top_index(mid)
    return m if mid.family is Family.PV else 2 * m


def skew_report(mid: ManifoldId) -> int:
    """Least-skew-embedding lower bound for PV or Y."""
    return skew_lower_bound_from_dual_index(
        manifold_dim(mid), _dual_top_cohomological_degree(mid)
    )


def non_immersion(mid: ManifoldId) -> int | None:
    """Largest E such that the dual-class obstruction rules out an immersion
    in R^E, namely dim + d - 1 for the top nonzero dual degree d; None when
    d = 0 (no obstruction is not a bound)."""
    d = _dual_top_cohomological_degree(mid)
    if d == 0:
        return None
    return manifold_dim(mid) + d - 1


def stable_span_upper(mid: ManifoldId) -> int:
    """Upper bound dim - 2m for the stable span of Y_{n,k}."""
    if mid.family is not Family.Y:
        raise UnsupportedFamilyError("stable span bound is defined for Y only")
    return manifold_dim(mid) - 2 * dual_top_index(mid)


def _ucharrank_pv(n: int, k: int) -> Verdict:
    gap = n - k
    if gap in (5, 6) or gap >= 9:
        if binom_parity(n, k - 1):
            return Verdict.determined(
                gap,
                f"binom({n},{k - 1}) odd and n-k = {gap} is 5, 6, or >= 9: "
                "ucharrank(PV) = n-k",
            )
        return Verdict.determined(
            gap - 1,
            f"binom({n},{k - 1}) even and n-k = {gap} is 5, 6, or >= 9: "
            "ucharrank(PV) = n-k-1",
        )
    if gap == 1 and n % 4 in (0, 1) and not binom_parity(n, 4):
        return Verdict.determined(
            2,
            f"n-k = 1 with n = {n} congruent to 0 or 1 mod 4 and binom({n},4) even: "
            "the degree-3 exterior class survives and is no Stiefel-Whitney class, "
            "so ucharrank(PV) = 2",
        )
    return Verdict.out_of_theorem_range(
        f"no ucharrank result covers PV with n-k = {gap} at these parameters"
    )


def _ucharrank_pw(n: int, k: int) -> Verdict:
    base = 2 * (n - k)
    if binom_parity(n, k - 1):
        return Verdict.determined(
            base + 2,
            f"binom({n},{k - 1}) odd: ucharrank(PW) = 2(n-k)+2 (the first "
            "odd-degree exterior class is no Stiefel-Whitney class)",
        )
    return Verdict.determined(
        base,
        f"binom({n},{k - 1}) even: ucharrank(PW) = 2(n-k) (the first "
        "odd-degree exterior class is no Stiefel-Whitney class)",
    )


def _ucharrank_y(n: int, k: int) -> Verdict:
    gap = n - 2 * k
    if gap in (5, 6) or gap >= 9:
        if binom_parity(n, 2 * k - 1):
            return Verdict.determined(
                gap,
                f"binom({n},{2 * k - 1}) odd and n-2k = {gap} is 5, 6, or >= 9: "
                "ucharrank(Y) = n-2k",
            )
        return Verdict.determined(
            gap - 1,
            f"binom({n},{2 * k - 1}) even and n-2k = {gap} is 5, 6, or >= 9: "
            "ucharrank(Y) = n-2k-1",
        )
    return Verdict.out_of_theorem_range(
        f"no ucharrank result covers Y with n-2k = {gap}"
    )


def ucharrank(mid: ManifoldId) -> Verdict:
    """Upper characteristic rank verdict for PV, PW, or Y."""
    if mid.family is Family.PV:
        return _ucharrank_pv(mid.n, mid.k)
    if mid.family is Family.PW:
        return _ucharrank_pw(mid.n, mid.k)
    if mid.family is Family.Y:
        return _ucharrank_y(mid.n, mid.k)
    raise UnsupportedFamilyError(
        f"ucharrank verdicts cover PV, PW, Y only, not {mid.family}"
    )


def parallelizable(mid: ManifoldId) -> Verdict:
    """Parallelizability verdict for Y_{n,k}.

    For n-2k >= 4 the first Pontryagin class (nk-2k^2-2k) x0^2 is nonzero,
    so Y is not parallelizable; the coefficient is cross-checked and a zero
    there is an internal bug, since k(n-2k-2) >= 2k in that range.
    """
    if mid.family is not Family.Y:
        raise UnsupportedFamilyError("parallelizability verdicts cover Y only")
    gap = mid.n - 2 * mid.k
    if gap >= 4:
        coefficient = p1_coefficient(mid)
        if coefficient == 0:
            raise InternalInconsistencyError(
                f"p1 coefficient vanished for {mid.label} despite n-2k >= 4"
            )
        return Verdict.determined(
            NOT_PARALLELIZABLE,
            f"p1 coefficient k(n-2k-2) = {coefficient} is nonzero and n-2k = "
            f"{gap} >= 4 makes x0^2 nonzero: not parallelizable",
        )
    return Verdict.unknown(
        f"no parallelizability obstruction is computed for n-2k = {gap} <= 3"
    )


def full_report(mid: ManifoldId) -> InvariantReport:
    """Assemble every invariant applicable to the manifold's family."""
    dim = manifold_dim(mid)
    if mid.family in (Family.V, Family.W):
        return InvariantReport(manifold=mid, dim=dim)
    if mid.family is Family.PW:
        return InvariantReport(manifold=mid, dim=dim, ucharrank=ucharrank(mid))
    report = InvariantReport(
        manifold=mid,
        dim=dim,
        skew_embed_lower_bound=skew_report(mid),
        non_immersion_dim=non_immersion(mid),
        stable_span_upper_bound=(
            stable_span_upper(mid) if mid.family is Family.Y else None
        ),
        ucharrank=ucharrank(mid),
        parallelizable=(
            parallelizable(mid) if mid.family is Family.Y else None
        ),
    )
    return report
