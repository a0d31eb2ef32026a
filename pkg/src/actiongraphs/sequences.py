"""Exact kernels for the Catalan-type number families.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NotCoprimeError

__all__ = [
    "SequenceSpec",
    "binomial",
    "catalan",
    "catalan_triangle",
    "fuss_catalan",
    "internal_triangles",
    "sequence_values",
    "strict_cat",
    "super_catalan",
    "weak_cat",
]


def _check_nat(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``.

    Multiplicative form; every partial product is itself a binomial
    coefficient, so the floor division is exact at each step.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def catalan(n: int) -> int:
    _check_nat("n", n)
    return binomial(2 * n, n) // (n + 1)


def fuss_catalan(n: int, k: int) -> int:
    _check_nat("n", n)
    _check_nat("k", k)
    if k == 0:
        raise ValueError("Fuss-Catalan numbers need k >= 1")
    return binomial(n * (k + 1), n) // (k * n + 1)


def catalan_triangle(n: int, k: int) -> int:
    """Entry ``C(n, k) = (n-k+1)/(n+1) * binom(n+k, k)`` for ``n >= k >= 0``."""
    _check_nat("n", n)
    _check_nat("k", k)
    if k > n:
        raise ValueError(f"Catalan's triangle needs k <= n, got n={n}, k={k}")
    return (n - k + 1) * binomial(n + k, k) // (n + 1)


def weak_cat(a: int, b: int) -> Fraction:
    """``(a+b-1)! / (a! b!)`` in lowest terms; need not be an integer."""
    _check_nat("a", a)
    _check_nat("b", b)
    if a == 0 and b == 0:
        raise ValueError("weak (a,b)-Catalan number is undefined at a = b = 0")
    return Fraction(binomial(a + b, a), a + b)


def strict_cat(a: int, b: int) -> int:
    _check_nat("a", a)
    _check_nat("b", b)
    if gcd(a, b) != 1:
        raise NotCoprimeError(a, b)
    value = weak_cat(a, b)
    assert value.denominator == 1, f"Cat({a},{b}) = {value} is not integral"
    return value.numerator


def internal_triangles(n: int) -> int:
    """Number of internal triangles over all triangulations of an (n+2)-gon.

    Returns 0 for ``n < 4``.
    """
    _check_nat("n", n)
    if n < 4:
        return 0
    return 2 * binomial(2 * n - 3, n - 4)


def super_catalan(m: int, n: int) -> int:
    """``S(m, n) = (2m)! (2n)! / (m! n! (m+n)!)``."""
    _check_nat("m", m)
    _check_nat("n", n)
    return binomial(2 * m, m) * binomial(2 * n, n) // binomial(m + n, m)


_KINDS = (
    "catalan",
    "fuss",
    "triangle_row",
    "triangle_column",
    "triangle_diagonal",
    "internal_triangles",
    "super_catalan_row",
    "explicit",
)


@dataclass(frozen=True)
class SequenceSpec:
    """A named integer sequence ``s_0, s_1, ...``.

    ``param`` carries the family parameter (``k`` for fuss and columns,
    ``n`` for rows, ``i`` for diagonals, ``m`` for super Catalan rows).
    Explicit sequences keep their terms in ``values``.
    """

    kind: str
    param: int | None = None
    values: tuple[int, ...] = field(default=(), compare=True)

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        needs_param = self.kind not in ("catalan", "internal_triangles", "explicit")
        if needs_param:
            if self.param is None:
                raise ValueError(f"sequence kind {self.kind!r} needs a parameter")
            _check_nat("param", self.param)
            if self.kind == "fuss" and self.param == 0:
                raise ValueError("Fuss-Catalan numbers need k >= 1")
        if self.kind == "explicit":
            if not self.values:
                raise ValueError("explicit sequences must be non-empty")
            for v in self.values:
                _check_nat("sequence term", v)

    @classmethod
    def explicit(cls, values) -> SequenceSpec:
        return cls("explicit", values=tuple(int(v) for v in values))

    @property
    def name(self) -> str:
        if self.kind == "explicit":
            return ",".join(str(v) for v in self.values)
        if self.param is None:
            return self.kind
        return f"{self.kind}({self.param})"

    @property
    def length(self) -> int | None:
        """Number of available terms, or ``None`` when unbounded."""
        if self.kind == "explicit":
            return len(self.values)
        if self.kind == "triangle_row":
            return self.param + 1
        return None

    def values_up_to(self, count: int) -> list[int]:
        return sequence_values(self, count)


def sequence_values(spec: SequenceSpec, count: int) -> list[int]:
    """First ``count`` terms of ``spec``.

    Triangle rows, columns and diagonals are returned as raw entries.
    The internal-triangle sequence starts with the root term 1 followed by
    ``t(4), t(5), ...``.
    """
    _check_nat("count", count)
    if count < 1:
        raise ValueError("count must be at least 1")
    available = spec.length
    if available is not None and count > available:
        raise ValueError(f"{spec.name} has only {available} terms, asked for {count}")
    p = spec.param
    kind = spec.kind
    if kind == "catalan":
        return [catalan(i) for i in range(count)]
    if kind == "fuss":
        return [fuss_catalan(i, p) for i in range(count)]
    if kind == "triangle_row":
        return [catalan_triangle(p, k) for k in range(count)]
    if kind == "triangle_column":
        return [catalan_triangle(p + i, p) for i in range(count)]
    if kind == "triangle_diagonal":
        return [catalan_triangle(p + k, k) for k in range(count)]
    if kind == "internal_triangles":
        return [1] + [internal_triangles(n) for n in range(4, 4 + count - 1)]
    if kind == "super_catalan_row":
        return [super_catalan(p, j) for j in range(count)]
    return list(spec.values[:count])
