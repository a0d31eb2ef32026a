from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actiongraphs.errors import NotCoprimeError
from actiongraphs.sequences import (
    SequenceSpec,
    binomial,
    catalan,
    catalan_triangle,
    fuss_catalan,
    internal_triangles,
    sequence_values,
    strict_cat,
    super_catalan,
    weak_cat,
)

from oracles import catalan_by_convolution, fuss_by_convolution


@given(st.integers(0, 200), st.integers(-5, 205))
def test_binomial_matches_math_comb(n: int, k: int) -> None:
    expected = comb(n, k) if 0 <= k <= n else 0
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (10, 16796)])
def test_catalan_values(n: int, expected: int) -> None:
    assert catalan(n) == expected


def test_catalan_closed_form_matches_convolution() -> None:
    conv = catalan_by_convolution(40)
    assert [catalan(n) for n in range(41)] == conv
    assert conv[10] == 16796


def test_fuss_catalan() -> None:
    assert fuss_catalan(3, 2) == 12
    assert fuss_catalan(0, 2) == 1
    assert [fuss_catalan(n, 2) for n in range(5)] == [1, 1, 3, 12, 55]
    for n in range(11):
        assert fuss_catalan(n, 1) == catalan(n)
    for k in range(1, 5):
        assert [fuss_catalan(n, k) for n in range(13)] == fuss_by_convolution(12, k)
    with pytest.raises(ValueError):
        fuss_catalan(3, 0)


TRIANGLE = [
    [1],
    [1, 1],
    [1, 2, 2],
    [1, 3, 5, 5],
    [1, 4, 9, 14, 14],
    [1, 5, 14, 28, 42, 42],
    [1, 6, 20, 48, 90, 132, 132],
    [1, 7, 27, 75, 165, 297, 429, 429],
    [1, 8, 35, 110, 275, 572, 1001, 1430, 1430],
]


def test_catalan_triangle_table() -> None:
    for n, row in enumerate(TRIANGLE):
        assert [catalan_triangle(n, k) for k in range(n + 1)] == row
    assert catalan_triangle(4, 2) == 9
    assert catalan_triangle(8, 7) == 1430
    with pytest.raises(ValueError):
        catalan_triangle(2, 3)


def test_catalan_triangle_observations() -> None:
    for n in range(13):
        assert catalan_triangle(n, 0) == 1
        assert catalan_triangle(n, n) == catalan(n)
        if n >= 1:
            assert catalan_triangle(n, 1) == n
            assert catalan_triangle(n + 1, n + 1) == catalan_triangle(n + 1, n)
        for k in range(2, n + 1):
            assert catalan_triangle(n + 1, k) == catalan_triangle(n + 1, k - 1) + catalan_triangle(n, k)


def _weak_by_factorials(a: int, b: int) -> Fraction:
    return Fraction(factorial(a + b - 1), factorial(a) * factorial(b))


def test_weak_cat() -> None:
    assert weak_cat(3, 6) == Fraction(28, 3)
    assert weak_cat(4, 2) == Fraction(5, 2)
    for a in range(1, 21):
        assert weak_cat(a, 1) == 1 == weak_cat(1, a)
    for a in range(25):
        for b in range(25):
            if a or b:
                assert weak_cat(a, b) == _weak_by_factorials(a, b)
    with pytest.raises(ValueError):
        weak_cat(0, 0)


def test_strict_cat() -> None:
    assert strict_cat(3, 4) == factorial(6) // (factorial(3) * factorial(4)) == 5
    assert strict_cat(2, 3) == 2
    for n in range(11):
        assert strict_cat(n, n + 1) == catalan(n)
    with pytest.raises(NotCoprimeError):
        strict_cat(2, 4)


def test_internal_triangles() -> None:
    assert internal_triangles(4) == 2
    assert internal_triangles(5) == 14
    assert internal_triangles(6) == 72
    assert internal_triangles(7) == 330
    for n in range(4, 40):
        by_catalan = (n + 2) * catalan(n - 1) - 2 * catalan(n)
        assert internal_triangles(n) == by_catalan == 2 * comb(2 * n - 3, n - 4)
    assert [internal_triangles(n) for n in range(4)] == [0, 0, 0, 0]
    # the Catalan-based formula is 0 at n = 2, 3 but 1 at n = 1
    assert 4 * catalan(1) - 2 * catalan(2) == 0
    assert 5 * catalan(2) - 2 * catalan(3) == 0
    assert 3 * catalan(0) - 2 * catalan(1) == 1


def test_super_catalan() -> None:
    assert [super_catalan(0, n) for n in range(5)] == [1, 2, 6, 20, 70]
    assert [super_catalan(1, n) for n in range(5)] == [2, 2, 4, 10, 28]
    for m in range(15):
        for n in range(15):
            assert super_catalan(m, n) == super_catalan(n, m)
            expected = factorial(2 * m) * factorial(2 * n)
            den = factorial(m) * factorial(n) * factorial(m + n)
            assert expected % den == 0
            assert super_catalan(m, n) == expected // den


@pytest.mark.parametrize(
    "spec, count, expected",
    [
        (SequenceSpec("triangle_diagonal", 0), 5, [1, 1, 2, 5, 14]),
        (SequenceSpec("triangle_column", 1), 4, [1, 2, 3, 4]),
        (SequenceSpec("triangle_row", 3), 4, [1, 3, 5, 5]),
        (SequenceSpec("triangle_diagonal", 2), 4, [1, 3, 9, 28]),
        (SequenceSpec("catalan"), 5, [1, 1, 2, 5, 14]),
        (SequenceSpec("fuss", 2), 5, [1, 1, 3, 12, 55]),
        (SequenceSpec("internal_triangles"), 4, [1, 2, 14, 72]),
        (SequenceSpec("super_catalan_row", 1), 5, [2, 2, 4, 10, 28]),
        (SequenceSpec.explicit([1, 4, 14, 48]), 3, [1, 4, 14]),
    ],
)
def test_sequence_values(spec: SequenceSpec, count: int, expected: list[int]) -> None:
    assert sequence_values(spec, count) == expected


def test_sequence_spec_validation() -> None:
    with pytest.raises(ValueError):
        SequenceSpec.explicit([])
    with pytest.raises(ValueError):
        SequenceSpec("fuss", 0)
    with pytest.raises(ValueError):
        SequenceSpec("triangle_row")
    with pytest.raises(ValueError):
        SequenceSpec("bogus")
    with pytest.raises(ValueError):
        sequence_values(SequenceSpec("triangle_row", 2), 4)
    with pytest.raises(ValueError):
        sequence_values(SequenceSpec("catalan"), 0)


# identity laws over the stated ranges


def test_symmetry() -> None:
    for a in range(31):
        for b in range(31):
            if a or b:
                assert weak_cat(a, b) == weak_cat(b, a)


def test_weak_cat_on_fuss_line() -> None:
    for n in range(13):
        for k in range(1, 5):
            assert weak_cat(n, k * n + 1) == fuss_catalan(n, k)


def test_triangle_to_weak_cat() -> None:
    for a in range(1, 31):
        for b in range(a):
            assert catalan_triangle(a - 1, b) == (a - b) * weak_cat(a, b)
        # b = a lies just outside the triangle, where the closed form has the
        # factor (n - k + 1) = 0, so both sides vanish
        assert (a - 1 - a + 1) * comb(2 * a - 1, a) == 0 == (a - a) * weak_cat(a, a)


def test_weak_cat_recurrences() -> None:
    for a in range(2, 31):
        for b in range(2, 31):
            assert weak_cat(a, b) == weak_cat(a, b - 1) + Fraction(a - 1, a) * weak_cat(a - 1, b)
    for n in range(2, 31):
        assert weak_cat(3, n) == weak_cat(3, n - 1) + Fraction(n + 1, 3)


def test_square_inequality_on_diagonals() -> None:
    for n in range(4, 31):
        assert n * n * weak_cat(n + 1, 1) ** 2 > n * weak_cat(n + 2, 2)


@settings(max_examples=200, derandomize=True)
@given(st.integers(1, 60), st.integers(0, 60))
def test_triangle_to_weak_cat_random(a: int, b: int) -> None:
    if b < a:
        assert catalan_triangle(a - 1, b) == (a - b) * weak_cat(a, b)
