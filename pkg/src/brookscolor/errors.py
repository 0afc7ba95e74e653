"""Exception hierarchy shared by every module."""


class BrooksColorError(Exception):
    """Base class for all library errors."""


class ParseError(BrooksColorError):
    """Malformed graph input. ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class ValidationError(BrooksColorError):
    """Input parsed but violates the simple-graph invariants."""


class ScaleRefusal(BrooksColorError):
    """An exact (exponential) routine was asked to run above its size bound."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class PreconditionError(BrooksColorError):
    """An operation was called on an input outside its contract.

    ``certificate`` optionally carries a witness explaining the violation
    (for instance the clique found when a graph had to be K_{Delta+1}-free).
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class DisconnectedError(PreconditionError):
    def __init__(self, message, unreachable=()):
        super().__init__(message, certificate={"unreachable": sorted(unreachable)})
        self.unreachable = tuple(sorted(unreachable))


class GreedyStuck(BrooksColorError):
    """Greedy coloring reached a vertex with no free color."""

    def __init__(self, vertex, blocked):
        super().__init__(f"vertex {vertex} has no free color; neighbours use {sorted(blocked)}")
        self.vertex = vertex
        self.blocked = frozenset(blocked)


class InvariantViolation(BrooksColorError):
    """An internal proof step failed. Always a bug, never a valid outcome.

    ``trace`` holds whatever steps were recorded before the failure.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])
