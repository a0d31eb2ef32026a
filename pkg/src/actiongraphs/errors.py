"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class ActionGraphError(Exception):
    """Base class for all errors raised by this package."""


class NotCoprimeError(ActionGraphError, ValueError):
    def __init__(self, a: int, b: int) -> None:
        super().__init__(f"strict (a,b)-Catalan number needs coprime arguments, got ({a}, {b})")
        self.a = a
        self.b = b


class SizeLimitExceeded(ActionGraphError):
    def __init__(self, size: int, limit: int) -> None:
        super().__init__(f"expanded graph would have {size} vertices, limit is {limit}")
        self.size = size
        self.limit = limit


class UnknownVertex(ActionGraphError, KeyError):
    def __init__(self, vertex: int) -> None:
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self) -> str:
        return f"unknown vertex id {self.vertex}"


class NonIntegralGrowth(ActionGraphError):
    """A condensed class would receive a fractional or negative number of children."""

    def __init__(self, step: int, node: int, label: int, value: Fraction) -> None:
        super().__init__(
            f"step {step}: node {node} (label {label}) would receive {value} new children"
        )
        self.step = step
        self.node = node
        self.label = label
        self.value = value


class RuleMissing(ActionGraphError, KeyError):
    def __init__(self, length: int) -> None:
        super().__init__(length)
        self.length = length

    def __str__(self) -> str:
        return f"no path-length rule for length {self.length}"


class NonIntegralEntry(ActionGraphError):
    """A predicted n-table entry is not an integer."""

    def __init__(self, n: int, length: int, label: int, value: Fraction) -> None:
        super().__init__(f"predicted K[{length}][{label}] of the {n}-table is {value}")
        self.n = n
        self.length = length
        self.label = label
        self.value = value
