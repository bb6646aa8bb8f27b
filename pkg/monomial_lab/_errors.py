class MonomialLabError(Exception):
    """Base class for errors raised by monomial_lab."""


class CapExceededError(MonomialLabError, RuntimeError):
    """An enumeration produced more elements than the configured cap."""


class OrderViolationError(MonomialLabError, ValueError):
    """A multi-index is not nondecreasing, or a concatenation would break the order."""


class MixedLengthError(MonomialLabError, ValueError):
    """A set of multi-indices mixes lengths where a single length is required."""


class WeightOverflowError(MonomialLabError, OverflowError):
    """An exact integer weight exceeds the configured bit cap."""


class UnsupportedSequenceError(MonomialLabError, ValueError):
    """The operation is not defined for this kind of weight sequence."""


class MembershipError(MonomialLabError, ValueError):
    """An index does not belong to the requested family."""


class DimensionError(MonomialLabError, ValueError):
    """A point or weight vector does not cover the coordinates that are needed."""


class DomainError(MonomialLabError, ValueError):
    """A parameter lies outside the domain of a formula."""
