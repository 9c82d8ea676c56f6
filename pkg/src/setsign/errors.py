"""Exception hierarchy shared by every setsign module."""

from __future__ import annotations


class SetSignError(Exception):
    """Base class for all errors raised by setsign."""


class InvalidVertex(SetSignError, ValueError):
    pass


class SelfLoopRejected(SetSignError, ValueError):
    pass


class EdgeNotInGraph(SetSignError, KeyError):
    pass


class CycleBudgetExceeded(SetSignError, RuntimeError):
    pass


class GroundSetMismatch(SetSignError, ValueError):
    pass


class NotInjective(SetSignError, ValueError):
    """Two vertices carry the same label.

    ``pair`` holds the colliding vertex ids.
    """

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class MissingLabel(SetSignError, ValueError):
    pass


class GroundSetTooSmall(SetSignError, ValueError):
    pass


class PreconditionViolated(SetSignError, ValueError):
    pass


class NotEulerian(SetSignError, ValueError):
    pass


class NotSetIndexer(SetSignError, ValueError):
    pass


class TooLarge(SetSignError, ValueError):
    pass


class BudgetExceeded(SetSignError, RuntimeError):
    pass


class DuplicateEdgeConflict(SetSignError, ValueError):
    pass


class ParseError(SetSignError, ValueError):
    """Malformed input document. ``line`` is 1-based, or 0 when unknown."""

    def __init__(self, line: int, reason: str, source: str | None = None):
        where = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{where}: {reason}")
        self.line = line
        self.reason = reason
        self.source = source


class IsolatedVertexWarning(UserWarning):
    pass
