"""Infer path-length rules from a sequence, one step at a time.

At step ``n`` every path into a vertex labeled ``n-1`` has length at most
``n-1``, and the only ones of length exactly ``n-1`` start at the root.
Rules for shorter lengths are already fixed by earlier steps, so they force
a number of new vertices; whatever ``s_n`` leaves over must be spread over
the longest paths, which fixes ``r(n-1)``.  A negative remainder is a
contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .axioms import GateReport, gate
from .builders import GraphFamily, PathRules, grow, single_vertex
from .errors import NonIntegralGrowth
from .graph import CondensedGraph, path_table
from .sequences import SequenceSpec, sequence_values

__all__ = [
    "Contribution",
    "InferenceReport",
    "StepTrace",
    "certify_infeasible",
    "infer_rules",
    "step_demand",
]

CONSISTENT = "consistent"
CONTRADICTION = "contradiction"
NON_INTEGRAL = "non-integral"
GATE = "gate"


@dataclass(frozen=True)
class Contribution:
    """Vertices forced by one rule from one source label."""

    length: int
    source_label: int
    paths: int
    rule: Fraction

    @property
    def added(self) -> Fraction:
        return self.paths * self.rule


@dataclass
class StepTrace:
    step: int
    forced: Fraction
    available: int
    contributions: list[Contribution]
    open_paths: int
    """Paths of length ``step - 1`` (from the root), whose rule is not yet known."""
    new_rule: tuple[int, Fraction] | None = None


@dataclass
class InferenceReport:
    sequence: list[int]
    rules: PathRules
    trace: list[StepTrace] = field(default_factory=list)
    outcome: str = CONSISTENT
    step: int = 0
    """Last consistent step, or the step where the outcome was decided."""
    forced: Fraction | None = None
    available: int | None = None
    value: Fraction | None = None
    """Offending per-path or per-class value for non-integral outcomes."""
    gate: GateReport | None = None
    graphs: list[CondensedGraph] = field(default_factory=list, repr=False)

    @property
    def consistent(self) -> bool:
        return self.outcome == CONSISTENT

    def family(self) -> GraphFamily:
        return GraphFamily("by_rules", {"rules": self.rules}, list(self.graphs), tuple(self.sequence))

    def describe(self) -> str:
        if self.outcome == CONSISTENT:
            return f"consistent up to step {self.step}"
        if self.outcome == CONTRADICTION:
            return (
                f"contradiction at step {self.step}: "
                f"forced={_fmt(self.forced)} available={self.available}"
            )
        if self.outcome == NON_INTEGRAL:
            return f"non-integral at step {self.step}: required value {_fmt(self.value)}"
        return f"gate: {self.gate.describe()}"

    def to_json(self) -> dict:
        return {
            "type": "inference",
            "sequence": self.sequence,
            "rules": self.rules.to_json(),
            "outcome": self.outcome,
            "step": self.step,
            "forced": _fmt(self.forced),
            "available": self.available,
            "value": _fmt(self.value),
            "gate": self.gate.to_json() if self.gate else None,
            "trace": [
                {
                    "step": t.step,
                    "forced": _fmt(t.forced),
                    "available": t.available,
                    "open_paths": t.open_paths,
                    "contributions": [
                        {
                            "length": c.length,
                            "source_label": c.source_label,
                            "paths": c.paths,
                            "rule": _fmt(c.rule),
                            "added": _fmt(c.added),
                        }
                        for c in t.contributions
                    ],
                    "new_rule": None
                    if t.new_rule is None
                    else {"length": t.new_rule[0], "value": _fmt(t.new_rule[1])},
                }
                for t in self.trace
            ],
        }


def _fmt(x: Fraction | int | None) -> str | None:
    return None if x is None else str(x)


def step_demand(g: CondensedGraph, step: int, rules: PathRules) -> tuple[Fraction, list[Contribution], int]:
    """Vertices that known rules force at ``step`` when growing ``g``.

    Returns ``(forced, contributions, open_paths)`` where ``open_paths``
    counts the length-``step-1`` paths, which have no rule when
    ``len(rules) == step - 1``.
    """
    table = path_table(g, step - 1)
    longest = step - 1
    if any(table[longest][v] for v in range(1, step)):
        raise AssertionError(f"step {step}: longest paths must start at the root")
    contributions = []
    forced = Fraction(0)
    for length in range(step):
        if length >= len(rules):
            continue
        rule = rules(length)
        for label in range(step - 1, -1, -1):
            paths = table[length][label]
            if paths:
                c = Contribution(length, label, paths, rule)
                contributions.append(c)
                forced += c.added
    open_paths = table[longest][0] if len(rules) <= longest else 0
    return forced, contributions, open_paths


def _values(s: SequenceSpec | list[int], n_max: int) -> list[int]:
    if isinstance(s, SequenceSpec):
        count = n_max + 1
        if s.length is not None:
            count = min(count, s.length)
        return sequence_values(s, count)
    return [int(v) for v in s][: n_max + 1]


def infer_rules(
    s: SequenceSpec | list[int],
    n_max: int,
    integral_rules: bool = False,
) -> InferenceReport:
    """Derive ``r(0), r(1), ...`` forced by ``s_1, ..., s_{n_max}``.

    With ``integral_rules`` every rule must be a non-negative integer;
    otherwise rules are exact rationals and only the per-vertex growth of
    every condensed class must be integral.
    """
    values = _values(s, n_max)
    if not values:
        raise ValueError("empty sequence")
    rules = PathRules()
    g = single_vertex()
    report = InferenceReport(values, rules, graphs=[g])
    if values[0] != 1:
        report.outcome = GATE
        if len(values) >= 3:
            report.gate = gate(values)
        else:
            report.gate = GateReport("infeasible", "lemma_s0", {"s0": values[0]})
        return report

    for step in range(1, len(values)):
        available = values[step]
        forced, contributions, open_paths = step_demand(g, step, rules)
        trace = StepTrace(step, forced, available, contributions, open_paths)
        report.trace.append(trace)
        remainder = available - forced
        if remainder < 0 or (open_paths == 0 and remainder != 0):
            report.outcome = CONTRADICTION
            report.step, report.forced, report.available = step, forced, available
            return report
        rule = remainder / open_paths if open_paths else Fraction(0)
        trace.new_rule = (step - 1, rule)
        if integral_rules and rule.denominator != 1:
            report.outcome = NON_INTEGRAL
            report.step, report.value = step, rule
            return report
        rules = rules.extended(rule)
        report.rules = rules
        try:
            g = grow(g, step, rules)
        except NonIntegralGrowth as exc:
            report.outcome = NON_INTEGRAL
            report.step, report.value = step, exc.value
            return report
        report.graphs.append(g)
        report.step = step
    return report


def certify_infeasible(
    s: SequenceSpec | list[int],
    n_max: int,
    integral_rules: bool = False,
) -> GateReport | InferenceReport:
    """Cheapest certificate: a gate violation if there is one, else the
    inference outcome."""
    values = _values(s, max(n_max, 2))
    if len(values) >= 3:
        g = gate(values)
        if not g.feasible:
            return g
    return infer_rules(values, n_max, integral_rules)
