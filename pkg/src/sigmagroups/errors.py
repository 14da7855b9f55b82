"""Exception types shared across the package."""


class SigmaGroupsError(Exception):
    """Base class for all errors raised by this package."""


class BadPermutation(SigmaGroupsError):
    """An image array or cycle list does not describe a bijection."""


class CapExceeded(SigmaGroupsError):
    """A closure or enumeration passed its configured resource cap."""


class NotNormal(SigmaGroupsError):
    """An operation requiring a normal subgroup received a non-normal one."""


class BadIso(SigmaGroupsError):
    """A quotient-matching map is not an isomorphism."""


class ParseError(SigmaGroupsError):
    """Malformed input text.  Carries 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class OverlappingBlocks(ParseError):
    """Two prime blocks of a partition share a prime."""


class Inconsistent(SigmaGroupsError):
    """An internal cross-check that should hold mathematically failed."""


class PreconditionFailed(SigmaGroupsError):
    """Explicitly checked operation precondition does not hold."""
