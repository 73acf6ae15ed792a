"""Exception hierarchy shared by every kromatic module."""


class KromaticError(Exception):
    """Base class for all errors raised by this package."""


class CapabilityError(KromaticError):
    """An input exceeds a documented size cap."""


class ParseError(KromaticError, ValueError):
    """Malformed textual graph input.

    ``offset`` is the byte offset of the offending character (or ``None``
    when the problem is not tied to one position).
    """

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class MalformedInvariantError(KromaticError, ValueError):
    """A coefficient vector violates a structural invariant."""


class InconsistentSystemError(KromaticError, ArithmeticError):
    """A linear system has no solution.

    ``provenance`` names the equation rows whose combination reduced to
    ``0 = nonzero``.
    """

    def __init__(self, message, provenance=()):
        self.provenance = tuple(provenance)
        if self.provenance:
            message = f"{message}; offending rows: {', '.join(self.provenance)}"
        super().__init__(message)


class SingularSystemError(KromaticError, ArithmeticError):
    """A square system expected to be nonsingular is not."""


class RecoveryError(KromaticError):
    """A recovery pipeline produced an impossible value or was misused."""
