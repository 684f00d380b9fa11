"""Exception types shared across the package."""


class GpbcError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(GpbcError):
    """Graph parameters violate the construction preconditions."""


class EndpointError(GpbcError):
    """A path-interior query was made with an endpoint vertex."""


class SameVertexError(GpbcError):
    """Two arguments that must be distinct vertices coincide."""


class OverlapError(GpbcError):
    """Two vertex sets that must be disjoint intersect."""


class MembershipError(GpbcError):
    """A vertex is not a member of the required vertex set."""


class DomainError(GpbcError):
    """A closed-form expression was queried outside its stated domain."""


class LimitExceeded(GpbcError):
    """An enumeration would produce more items than the caller allowed."""


class BadVertexLabel(GpbcError):
    """A vertex label string could not be parsed."""
