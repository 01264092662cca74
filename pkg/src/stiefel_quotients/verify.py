"""Cross-validation suites pairing every fast path with its brute-force oracle.

Five suites are available:

* ``parity``       bitwise binomial parity vs. the additive Pascal triangle,
* ``inverse``      Newton inversion vs. back-substitution, on random units,
* ``basis``        Betti numbers by expansion vs. explicit monomial counts,
* ``duality``      Poincare duality of every presentation, via the oracle,
* ``consistency``  the characteristic-rank case split recomputed three ways,
                   plus Pontryagin/parallelizability coherence.

``run_suites`` drives them up to a parameter bound max_n; a bound below 1 is
reported as vacuous (zero cases) rather than an error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import oracle
from .charclasses import p1_coefficient
from .cohomology import (
    Family,
    ManifoldId,
    betti_numbers,
    charrank_of_canonical_bundle,
    circle_cutoff,
    iter_manifolds,
    presentation,
    projective_cutoff,
    valid_k_range,
)
from .errors import LimitExceededError
from .gf2 import TruncatedGF2Poly, binom_parity, poly_inverse, poly_mul
from .invariants import NOT_PARALLELIZABLE, VerdictStatus, parallelizable, ucharrank

__all__ = ["SUITE_NAMES", "SuiteResult", "run_suites"]

SUITE_NAMES = ("parity", "inverse", "basis", "duality", "consistency")

_MAX_RECORDED_FAILURES = 8

# The basis suite trades the oracle's full default ceiling for speed: ids
# whose monomial count exceeds this are counted as skipped, never silently
# dropped.  Tests exercise the full DEFAULT_BASIS_CEILING on selected ids.
_BASIS_SWEEP_CEILING = 1 << 16

_INVERSE_TRUNCATIONS = (8, 64, 256)
_INVERSE_SEED = 961748927


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    overflow_failures: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.overflow_failures

    def record(self, message: str) -> None:
        if len(self.failures) < _MAX_RECORDED_FAILURES:
            self.failures.append(message)
        else:
            self.overflow_failures += 1

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {self.skipped} skipped (over oracle ceiling)" if self.skipped else ""
        return f"{status} {self.name}: {self.cases} cases{extra}"


def _run_parity(max_n: int) -> SuiteResult:
    result = SuiteResult("parity")
    triangle = oracle.ParityTriangle(max_n)
    for n in range(max_n + 1):
        for r in range(n + 1):
            result.cases += 1
            fast = binom_parity(n, r)
            slow = oracle.pascal_parity(n, r, triangle=triangle)
            if fast != slow:
                result.record(
                    f"binom({n},{r}): bitwise says {fast}, triangle says {slow}"
                )
    return result


def _run_inverse(max_n: int) -> SuiteResult:
    result = SuiteResult("inverse")
    rng = random.Random(_INVERSE_SEED)
    units_per_truncation = 10 * max_n
    for t in _INVERSE_TRUNCATIONS:
        for _ in range(units_per_truncation):
            a = TruncatedGF2Poly(rng.getrandbits(t) | 1, t)
            result.cases += 1
            inv = poly_inverse(a)
            if poly_mul(a, inv).bits != 1:
                result.record(f"a * poly_inverse(a) != 1 for bits={a.bits:#x}, T={t}")
                continue
            if inv != oracle.naive_inverse(a):
                result.record(
                    f"poly_inverse disagrees with back-substitution for "
                    f"bits={a.bits:#x}, T={t}"
                )
    return result


def _run_basis(max_n: int) -> SuiteResult:
    result = SuiteResult("basis")
    for mid in iter_manifolds(max_n):
        p = presentation(mid)
        try:
            basis = oracle.enumerate_basis(p, ceiling=_BASIS_SWEEP_CEILING)
        except LimitExceededError:
            result.skipped += 1
            continue
        result.cases += 1
        histogram = [0] * (p.manifold_dim + 1)
        out_of_range = 0
        for degree, _ in basis:
            if 0 <= degree <= p.manifold_dim:
                histogram[degree] += 1
            else:
                out_of_range += 1
        if out_of_range or histogram != betti_numbers(p):
            result.record(f"{mid.label}: monomial histogram != Betti numbers")
    return result


def _run_duality(max_n: int) -> SuiteResult:
    result = SuiteResult("duality")
    for mid in iter_manifolds(max_n):
        result.cases += 1
        bad_degree = oracle.check_duality(presentation(mid))
        if bad_degree is not None:
            result.record(f"{mid.label}: duality check failed at degree {bad_degree}")
    return result


def _run_consistency(max_n: int) -> SuiteResult:
    result = SuiteResult("consistency")
    for n in range(2, max_n + 1):
        for k in valid_k_range(Family.PV, n):
            result.cases += 1
            mid = ManifoldId(Family.PV, n, k)
            odd = binom_parity(n, k - 1)
            at_window_start = projective_cutoff(n, k) == n - k + 1
            charrank = charrank_of_canonical_bundle(presentation(mid))
            if not (odd == at_window_start == (charrank == n - k)):
                result.record(
                    f"{mid.label}: binomial parity, cutoff position, and "
                    f"charrank disagree"
                )
                continue
            gap = n - k
            if gap in (5, 6) or gap >= 9:
                verdict = ucharrank(mid)
                if verdict.status is not VerdictStatus.DETERMINED or verdict.value != charrank:
                    result.record(
                        f"{mid.label}: ucharrank {verdict.status}/{verdict.value} "
                        f"!= charrank {charrank}"
                    )
    for n in range(3, max_n + 1):
        for k in valid_k_range(Family.Y, n):
            result.cases += 1
            mid = ManifoldId(Family.Y, n, k)
            p = presentation(mid)
            odd = binom_parity(n, 2 * k - 1)
            at_window_start = 2 * circle_cutoff(n, k) - 1 == n - 2 * k
            excluded_bottom = p.excluded_degree == n - 2 * k
            charrank = charrank_of_canonical_bundle(p)
            if not (odd == at_window_start == excluded_bottom == (charrank == n - 2 * k)):
                result.record(
                    f"{mid.label}: binomial parity, cutoff position, excluded "
                    f"generator, and charrank disagree"
                )
                continue
            gap = n - 2 * k
            if gap in (5, 6) or gap >= 9:
                verdict = ucharrank(mid)
                if verdict.status is not VerdictStatus.DETERMINED or verdict.value != charrank:
                    result.record(
                        f"{mid.label}: ucharrank {verdict.status}/{verdict.value} "
                        f"!= charrank {charrank}"
                    )
            if gap >= 4:
                coefficient = p1_coefficient(mid)
                verdict = parallelizable(mid)
                if (
                    coefficient != k * (n - 2 * k - 2)
                    or coefficient <= 0
                    or verdict.status is not VerdictStatus.DETERMINED
                    or verdict.value != NOT_PARALLELIZABLE
                ):
                    result.record(
                        f"{mid.label}: parallelizability verdict and p1 "
                        f"coefficient are incoherent"
                    )
    return result


_RUNNERS = {
    "parity": _run_parity,
    "inverse": _run_inverse,
    "basis": _run_basis,
    "duality": _run_duality,
    "consistency": _run_consistency,
}


def run_suites(names: list[str] | None = None, max_n: int = 30) -> list[SuiteResult]:
    """Run the named suites (all by default) up to the parameter bound.

    max_n < 1 yields vacuous results with zero cases.
    """
    selected = list(SUITE_NAMES) if names is None else list(names)
    for name in selected:
        if name not in _RUNNERS:
            raise ValueError(
                f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}"
            )
    if max_n < 1:
        return [SuiteResult(name) for name in selected]
    return [_RUNNERS[name](max_n) for name in selected]
