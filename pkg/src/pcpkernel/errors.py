"""Exception types shared across the package.

Every error that callers are expected to branch on gets its own class so the
CLI can map it to a stable exit code.
"""

from __future__ import annotations


class PcpError(Exception):
    """Base class for all errors raised by this package."""


class LoopArc(PcpError):
    def __init__(self, v):
        super().__init__(f"self-loop at vertex {v}")
        self.vertex = v


class DuplicateArc(PcpError):
    def __init__(self, u, v):
        super().__init__(f"duplicate arc ({u}, {v})")
        self.u = u
        self.v = v


class NonPositiveColor(PcpError):
    def __init__(self, color):
        super().__init__(f"arc color must be a positive integer, got {color!r}")
        self.color = color


class VertexOutOfRange(PcpError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for digraph with n={n}")
        self.vertex = v
        self.n = n


class AcdSyntaxError(PcpError):
    """Malformed line in an ACD document."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownVertexLabel(PcpError):
    def __init__(self, label):
        super().__init__(f"unknown vertex label {label!r}")
        self.label = label


class UnknownInstance(PcpError):
    def __init__(self, name):
        super().__init__(f"unknown named instance {name!r}")
        self.name = name


class BadParameter(PcpError):
    pass


class SameVertex(PcpError):
    def __init__(self, v):
        super().__init__(f"query requires two distinct vertices, got {v} twice")
        self.vertex = v


class BudgetExceeded(PcpError):
    """A search or enumeration ran past its step budget.

    Deliberately distinct from a negative answer: callers must treat this as
    "unknown", never as "no".
    """


class TooLarge(PcpError):
    def __init__(self, n, limit):
        super().__init__(f"instance size n={n} exceeds guard {limit}")
        self.n = n
        self.limit = limit


class NotAcyclic(PcpError):
    pass


class NotACycle(PcpError):
    pass


class NotUnicyclic(PcpError):
    pass


class CycleNotProperlyColored(PcpError):
    pass


class NotSemiComplete(PcpError):
    pass


class NotBipartiteTournament(PcpError):
    pass


class NoApplicableCondition(PcpError):
    """Neither sufficient condition of the bipartite-tournament constructor holds."""


class EmptyDigraph(PcpError):
    pass
