"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A distribution or model parameter is outside its valid range."""


class DomainError(ValueError):
    """An operation input violates a precondition (range, ordering, size)."""


class UnsupportedError(ValueError):
    """The requested distribution kind is not supported by this operation."""


class TieError(ValueError):
    """Input increments have subset-average ties, so the construction is not unique."""


class CapacityError(ValueError):
    """Instance too large for exact enumeration."""


class SamplingError(RuntimeError):
    """A bounded-retry sampling loop failed to produce a valid draw."""
