"""Exception hierarchy.

Every error raised by the library derives from :class:`BinopError`.  The CLI
maps :class:`GuardExceeded` to exit code 3 and the remaining errors on input
to exit code 2.
"""

from __future__ import annotations


class BinopError(Exception):
    pass


class ShapeMismatch(BinopError, ValueError):
    pass


class OutOfRangeEntry(BinopError, ValueError):
    pass


class IndexOutOfRange(BinopError, IndexError):
    pass


class PointSetMismatch(BinopError, ValueError):
    pass


class NotInvertible(BinopError, ValueError):
    pass


class GuardExceeded(BinopError):
    """Work would exceed a configured size guard."""


class OrderGuardExceeded(GuardExceeded):
    pass


class ClosureGuardExceeded(GuardExceeded):
    pass


class SearchSpaceTooLarge(GuardExceeded):
    pass


class GroupAxiomError(BinopError, ValueError):
    """A multiplication table violates a group axiom.

    ``witness`` holds the first offending element or triple of element
    indices, in row-major scan order.
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class NotAssociative(GroupAxiomError):
    pass


class NoIdentity(GroupAxiomError):
    pass


class MissingInverse(GroupAxiomError):
    pass


class NotLatinSquare(GroupAxiomError):
    pass


class ParseError(BinopError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateLabel(ParseError):
    pass


class UnknownLabel(ParseError):
    def __init__(self, token: str, line: int | None = None):
        super().__init__(f"unknown label {token!r}", line)
        self.token = token


class MissingRow(ParseError):
    def __init__(self, label: str):
        super().__init__(f"missing row for {label!r}")
        self.label = label


class ExtraRow(ParseError):
    def __init__(self, label: str, line: int | None = None):
        super().__init__(f"extra row for {label!r}", line)
        self.label = label


class ArityMismatch(ParseError):
    pass
