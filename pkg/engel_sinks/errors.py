"""Exception hierarchy shared by all subpackages."""


class EngelSinkError(Exception):
    """Base class for every error raised by engel_sinks."""


class DegreeMismatchError(EngelSinkError, ValueError):
    """Two permutations act on domains of different sizes."""


class CycleParseError(EngelSinkError, ValueError):
    """A cycle-notation string or image array could not be read."""


class NotInGroupError(EngelSinkError, KeyError):
    """An element is not a member of the group it was used with."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class GroupTooLargeError(EngelSinkError, ValueError):
    """An enumeration would exceed its configured ceiling."""


class NotNormalError(EngelSinkError, ValueError):
    """A subgroup expected to be normal is not."""


class NotInvariantError(EngelSinkError, ValueError):
    """A subgroup is not invariant under the acting element."""


class NotAHomomorphismError(EngelSinkError, ValueError):
    """Generator images do not extend to an automorphism."""


class ArithmeticOverflowError(EngelSinkError, OverflowError):
    """An integer left the supported 128-bit unsigned range."""


class UnknownCheckError(EngelSinkError, KeyError):
    """A check pattern matched no registered check."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class UnresolvableReferenceError(EngelSinkError, ValueError):
    """A group, element or automorphism reference could not be resolved."""


class InvariantViolationError(EngelSinkError, AssertionError):
    """A computed object broke a property that a theorem guarantees."""
