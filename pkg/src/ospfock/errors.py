"""Exceptions raised by ospfock."""


class OspFockError(ValueError):
    """Base class for all domain errors."""


class TypicalWeight(OspFockError):
    """An operation that needs an atypical weight was given a typical one."""


class RankTooLarge(OspFockError):
    pass


class NotDivisible(OspFockError):
    """Exact division by the Weyl denominator left a remainder."""


class NotInKacSpan(OspFockError):
    pass


class DegreeTooSmall(OspFockError):
    pass


class DecompositionFailed(OspFockError):
    """Greedy peeling of a character by irreducibles hit a negative coefficient."""
