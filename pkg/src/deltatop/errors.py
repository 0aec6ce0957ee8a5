"""Exception hierarchy shared by all deltatop engines."""


class DeltaTopError(ValueError):
    """Base class for all deltatop errors."""


class CarrierMismatchError(DeltaTopError):
    """A set was used with a space or family over a different carrier."""


class MalformedInputError(DeltaTopError):
    """Structurally invalid input (bad family, bad JSON, bad table)."""


class DegenerateInputError(DeltaTopError):
    """An operation received an input it is defined to reject (e.g. empty subspace)."""


class MalformedIntervalError(DeltaTopError):
    """An interval with lower bound above upper bound, or an empty open degenerate."""


class UnsupportedEndpointError(DeltaTopError):
    """An endpoint outside the exact-arithmetic fragment (irrational square root)."""


class NotACoverError(DeltaTopError):
    """A family handed to subcover extraction does not cover its target."""


class InvalidFamilyError(DeltaTopError):
    """A family member violates a required property (e.g. not delta-closed)."""


class PreconditionError(DeltaTopError):
    """An operation's stated precondition was violated by the caller."""


class UnknownTheoremError(DeltaTopError):
    """A theorem id not present in the registry."""


class OversizeStreamError(DeltaTopError):
    """An instance stream beyond the supported exhaustive-sweep bounds."""
