"""Exact mod-2 cohomology, characteristic classes, and geometric invariants
for real/complex Stiefel manifolds and their projective and circle quotients.

The public surface mirrors the layered design: :mod:`gf2` is the arithmetic
kernel, :mod:`cohomology` builds additive presentations, :mod:`charclasses`
computes tangent-bundle class data, :mod:`invariants` derives the numerical
conclusions, :mod:`oracle` holds the brute-force cross-checks, and
:mod:`cli` exposes everything as the ``stiefel`` command.
"""

from .charclasses import (
    CharClassReport,
    char_class_report,
    dual_top_index,
    inverse_sw,
    p1_coefficient,
    total_sw,
)
from .cohomology import (
    CohomologyPresentation,
    Family,
    ManifoldId,
    betti_numbers,
    charrank_of_canonical_bundle,
    circle_cutoff,
    iter_manifolds,
    manifold_dim,
    presentation,
    projective_cutoff,
    valid_k_range,
)
from .errors import (
    InternalInconsistencyError,
    InvalidManifoldError,
    LimitExceededError,
    MismatchedTruncationError,
    NonUnitError,
    NoPolynomialPartError,
    StiefelError,
    UnsupportedFamilyError,
)
from .gf2 import (
    TruncatedGF2Poly,
    binom_parity,
    geometric_inverse_coefficient,
    one_plus_x,
    poly_inverse,
    poly_mul,
    poly_pow,
)
from .invariants import (
    NOT_PARALLELIZABLE,
    InvariantReport,
    Verdict,
    VerdictStatus,
    full_report,
    non_immersion,
    parallelizable,
    skew_lower_bound_from_dual_index,
    skew_report,
    stable_span_upper,
    ucharrank,
)

__version__ = "0.1.0"

__all__ = [
    "CharClassReport",
    "CohomologyPresentation",
    "Family",
    "InternalInconsistencyError",
    "InvalidManifoldError",
    "InvariantReport",
    "LimitExceededError",
    "ManifoldId",
    "MismatchedTruncationError",
    "NOT_PARALLELIZABLE",
    "NoPolynomialPartError",
    "NonUnitError",
    "StiefelError",
    "TruncatedGF2Poly",
    "UnsupportedFamilyError",
    "Verdict",
    "VerdictStatus",
    "betti_numbers",
    "binom_parity",
    "char_class_report",
    "charrank_of_canonical_bundle",
    "circle_cutoff",
    "dual_top_index",
    "full_report",
    "geometric_inverse_coefficient",
    "inverse_sw",
    "iter_manifolds",
    "manifold_dim",
    "non_immersion",
    "one_plus_x",
    "p1_coefficient",
    "parallelizable",
    "poly_inverse",
    "poly_mul",
    "poly_pow",
    "presentation",
    "projective_cutoff",
    "skew_lower_bound_from_dual_index",
    "skew_report",
    "stable_span_upper",
    "total_sw",
    "ucharrank",
    "valid_k_range",
]
