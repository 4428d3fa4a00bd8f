"""Exception types shared across the package."""


class CopulaCheckError(ValueError):
    """Base class for all errors raised deliberately by this package."""


class ValidationError(CopulaCheckError):
    """A value violates its structural contract (bad knots, ragged rows, bad payload)."""


class DomainError(CopulaCheckError):
    """An argument lies outside the mathematical domain of the operation."""
