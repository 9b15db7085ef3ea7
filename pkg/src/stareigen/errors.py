"""Exception types shared across the package."""


class StarEigenError(Exception):
    """Base class for all package errors."""


class SizeError(StarEigenError, ValueError):
    """Operands live on symmetric groups of different degree, or an index is out of range."""


class ResourceError(StarEigenError):
    """A requested enumeration exceeds the configured ceiling."""


class SpecError(StarEigenError, ValueError):
    """A PI-eigenfunction specification violates one of its invariants."""


class PreconditionError(StarEigenError, ValueError):
    """An operation was called on input outside its documented domain."""


class IntegralityError(StarEigenError):
    """A floating eigenvalue is not within tolerance of an integer."""


class ParseError(StarEigenError, ValueError):
    """Malformed textual or JSON input."""
