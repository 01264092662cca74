"""Exception types shared across the library."""


class StiefelError(Exception):
    """Base class for all errors raised by this package."""


class MismatchedTruncationError(StiefelError, ValueError):
    """Polynomials with different truncation exponents were combined."""


class NonUnitError(StiefelError, ValueError):
    """Inversion or a negative power was requested for a non-unit."""


class InvalidManifoldError(StiefelError, ValueError):
    """Manifold parameters violate the family's validity constraints."""


class UnsupportedFamilyError(StiefelError, ValueError):
    """The requested quantity is not defined for this manifold family."""


class NoPolynomialPartError(StiefelError, ValueError):
    """The presentation has no polynomial generator (V and W families)."""


class InternalInconsistencyError(StiefelError, RuntimeError):
    """A cross-check that must hold by construction failed: this is a bug."""


class LimitExceededError(StiefelError, RuntimeError):
    """A brute-force oracle was asked to go beyond its configured ceiling."""
