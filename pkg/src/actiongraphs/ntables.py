"""Path-count tables of the super Catalan graphs and bounded checks of the
two table recurrences."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .builders import GraphFamily, build_super
from .errors import NonIntegralEntry
from .graph import path_table
from .sequences import super_catalan

__all__ = [
    "NTable",
    "VerificationReport",
    "compute_ntable",
    "predict_next_super",
    "predict_ntable",
    "verify_conjectures",
]


@dataclass(frozen=True)
class NTable:
    """``entries[l][v]``: length-``l`` paths from label-``v`` vertices to
    label-``n`` vertices of ``G_n``."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = self.n + 1
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"an {self.n}-table must be {size} x {size}")

    def __getitem__(self, index: tuple[int, int]) -> int:
        length, label = index
        if 0 <= length <= self.n and 0 <= label <= self.n:
            return self.entries[length][label]
        return 0

    def row(self, length: int) -> list[int]:
        return list(self.entries[length])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"n={self.n}"] + [f"v={v}" for v in range(self.n + 1)])
        for length, row in enumerate(self.entries):
            writer.writerow([f"l={length}"] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}


def compute_ntable(fam: GraphFamily, n: int) -> NTable:
    if not 0 <= n <= fam.n_max:
        raise ValueError(f"family is built to step {fam.n_max}, asked for the {n}-table")
    table = path_table(fam.graphs[n], n)
    return NTable(n, tuple(tuple(row) for row in table))


def _weight(i: int) -> Fraction:
    return Fraction(2, 2**i)


def predict_next_super(t: NTable) -> Fraction:
    """``sum_l 2/2**l * sum_v K[l][v]``; a non-integer result is returned as is."""
    return sum(
        (_weight(length) * sum(t.entries[length]) for length in range(t.n + 1)),
        Fraction(0),
    )


def predict_ntable(prev: NTable) -> NTable:
    """The ``(n+1)``-table predicted from the ``n``-table alone.

    Rows ``l >= 1`` use ``K'[l][v] = sum_{i=0}^{n+1-l-v} 2/2**i K[l-1+i][v]``.
    The ``l = 0`` row is zero except ``K'[0][n+1]``, which is taken from
    :func:`predict_next_super`.
    """
    n = prev.n
    size = n + 2
    rows: list[tuple[int, ...]] = []
    for length in range(size):
        row = []
        for v in range(size):
            if length == 0:
                value = predict_next_super(prev) if v == n + 1 else Fraction(0)
            else:
                value = sum(
                    (_weight(i) * prev[length - 1 + i, v] for i in range(n + 2 - length - v)),
                    Fraction(0),
                )
            if value.denominator != 1:
                raise NonIntegralEntry(n + 1, length, v, value)
            row.append(value.numerator)
        rows.append(tuple(row))
    return NTable(n + 1, tuple(rows))


@dataclass
class StepVerdict:
    n: int
    """Transition from the ``n``-table to the ``(n+1)``-table."""
    table_recurrence: bool
    next_super: bool
    predicted_super: Fraction
    actual_super: int
    discrepancy: tuple[int, int, int, str, int] | None = None
    """``(n+1, l, v, predicted, actual)`` of the first differing entry."""


@dataclass
class VerificationReport:
    n_max: int
    steps: list[StepVerdict] = field(default_factory=list)
    note: str = (
        "row l=0 of each predicted table is not covered by the table recurrence; "
        "it is filled with the predicted next super Catalan number"
    )

    @property
    def passed(self) -> bool:
        return all(s.table_recurrence and s.next_super for s in self.steps)

    @property
    def first_discrepancy(self) -> StepVerdict | None:
        return next((s for s in self.steps if not (s.table_recurrence and s.next_super)), None)

    def to_json(self) -> dict:
        first = self.first_discrepancy
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "note": self.note,
            "first_discrepancy": None if first is None else first.n,
            "steps": [
                {
                    "n": s.n,
                    "table_recurrence": s.table_recurrence,
                    "next_super": s.next_super,
                    "predicted_super": str(s.predicted_super),
                    "actual_super": s.actual_super,
                    "discrepancy": None if s.discrepancy is None else list(s.discrepancy),
                }
                for s in self.steps
            ],
        }


def verify_conjectures(n_max: int, fam: GraphFamily | None = None) -> VerificationReport:
    """Check both recurrences on every transition ``n -> n+1`` with ``n < n_max``."""
    if fam is None:
        fam = build_super(n_max)
    tables = [compute_ntable(fam, n) for n in range(n_max + 1)]
    report = VerificationReport(n_max)
    for n in range(n_max):
        actual = tables[n + 1]
        predicted_super = predict_next_super(tables[n])
        actual_super = super_catalan(0, n + 1)
        discrepancy = None
        try:
            predicted = predict_ntable(tables[n])
        except NonIntegralEntry as exc:
            discrepancy = (n + 1, exc.length, exc.label, str(exc.value), actual[exc.length, exc.label])
        else:
            for length in range(n + 2):
                for v in range(n + 2):
                    if predicted[length, v] != actual[length, v]:
                        discrepancy = (n + 1, length, v, str(predicted[length, v]), actual[length, v])
                        break
                if discrepancy:
                    break
        report.steps.append(
            StepVerdict(
                n,
                discrepancy is None,
                predicted_super == actual_super,
                predicted_super,
                actual_super,
                discrepancy,
            )
        )
    return report
