"""Exception types shared across the package."""


class HalfderError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(HalfderError, ValueError):
    """A vector or matrix has the wrong shape for the requested operation."""


class ParameterError(HalfderError, ValueError):
    """A family parameter violates its constraints."""


class ParseError(HalfderError, ValueError):
    """A serialized object is malformed."""


class ValidationError(HalfderError, ValueError):
    """A deserialized object violates a structural invariant (e.g. Jacobi)."""


class UnsupportedFamilyError(HalfderError, ValueError):
    """The requested family is not covered by the requested operation."""


class WitnessRefusalError(HalfderError, ValueError):
    """No local-but-not-derivation witness exists for this family."""
