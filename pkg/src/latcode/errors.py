"""Exception hierarchy shared by every latcode module."""


class LatcodeError(Exception):
    """Base class for all library errors."""


class InvalidField(LatcodeError, ValueError):
    pass


class FieldMismatch(LatcodeError, ValueError):
    pass


class NotPrime(LatcodeError, ValueError):
    pass


class UnsupportedSplitting(LatcodeError):
    """Raised for primes that split; only inert and ramified primes are handled."""


class DivisionByZero(LatcodeError, ZeroDivisionError):
    pass


class RankDeficient(LatcodeError, ValueError):
    pass


class NotSystematic(LatcodeError, ValueError):
    """Pivots of the row-reduced generator are not the leading k columns."""


class SearchFailed(LatcodeError):
    pass


class InvalidInput(LatcodeError, ValueError):
    pass


class InternalInconsistency(LatcodeError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class PreconditionFailed(LatcodeError, ValueError):
    pass


class Unsupported(LatcodeError):
    pass


class NotPositiveDefinite(LatcodeError, ValueError):
    pass


class NeedLargerPrefix(LatcodeError):
    """The theta prefix is too short for the requested secrecy-gain tolerance."""

    def __init__(self, message: str, suggested_M: int):
        super().__init__(message)
        self.suggested_M = suggested_M


class CodeParseError(LatcodeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class LatticeFormatError(LatcodeError, ValueError):
    """A serialized lattice or config file is malformed or inconsistent."""
