"""
Error types raised by the rainbowtri library.
The CLI maps each of them onto the exit-code contract in protocol.ExitCode.
"""

from typing import Optional, Tuple


class RainbowTriError(Exception):
    """Base class for every library error."""


class InvalidArgumentError(RainbowTriError, ValueError):
    """An argument is outside the domain of the operation (e.g. a vertex id >= n)."""


class PreconditionViolation(RainbowTriError):
    """An operation's precondition does not hold for its input."""

    def __init__(self, message: str, edge: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.edge = edge


class GraphParseError(RainbowTriError):
    """A graph file is malformed. `line_number` is 1-based, 0 when unknown."""

    def __init__(self, message: str, line_number: int = 0):
        prefix = f"line {line_number}: " if line_number else ""
        super().__init__(prefix + message)
        self.line_number = line_number


class LimitExceededError(RainbowTriError):
    """An exhaustive enumeration was requested above its configured cap."""

    def __init__(self, n: int, cap: int, what: str = "exhaustive enumeration"):
        super().__init__(f"{what} requested for n={n}, above the configured cap of {cap}")
        self.n = n
        self.cap = cap
