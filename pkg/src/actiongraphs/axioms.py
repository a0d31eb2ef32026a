"""Checks of the three structural axioms and the two necessary conditions
on a sequence (``s_0 = 1`` and ``s_2 >= s_1**2``)."""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field

from .builders import GraphFamily
from .errors import SizeLimitExceeded
from .graph import DEFAULT_SIZE_LIMIT, canonicalize, expand, leaves_all_labeled
from .sequences import SequenceSpec, sequence_values

__all__ = [
    "Axiom1Result",
    "Axiom2Result",
    "Axiom3Result",
    "AxiomReport",
    "GateReport",
    "check_axiom1",
    "check_axiom2",
    "check_axiom3",
    "check_axioms",
    "gate",
]

PASS = "pass"
FAIL = "fail"
NOT_CHECKED = "not checked (size)"


def _as_values(s: SequenceSpec | list[int] | tuple[int, ...], count: int) -> list[int]:
    if isinstance(s, SequenceSpec):
        return sequence_values(s, count)
    values = [int(v) for v in s]
    if len(values) < count:
        raise ValueError(f"sequence has {len(values)} terms, need {count}")
    return values[:count]


@dataclass
class Axiom1Result:
    status: str
    rows: list[tuple[int, int, int]]
    """``(step, expected, actual)`` for every step."""
    first_failure: tuple[int, int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class Axiom2Match:
    depth: int
    label: int
    matched_k: int | None
    count: int
    expected_k: int

    @property
    def unexpected(self) -> bool:
        return self.matched_k is not None and self.matched_k != self.expected_k


@dataclass
class Axiom2Result:
    status: str
    n: int
    method: str
    matches: list[Axiom2Match] = field(default_factory=list)
    counterexample: int | None = None
    """Vertex (expanded) or node (condensed) whose subtree matched no ``G_k``."""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def flagged(self) -> list[Axiom2Match]:
        return [m for m in self.matches if m.unexpected]


@dataclass
class Axiom3Result:
    status: str
    n: int
    offending_leaves: list[tuple[int, int]] = field(default_factory=list)
    """``(node, label)`` of leaves not labeled ``n``."""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class AxiomReport:
    axiom1: Axiom1Result
    axiom2: list[Axiom2Result]
    axiom3: list[Axiom3Result]

    @property
    def passed(self) -> bool:
        return (
            self.axiom1.passed
            and all(r.passed for r in self.axiom2)
            and all(r.passed for r in self.axiom3)
        )

    def to_json(self) -> dict:
        return {"passed": self.passed, **asdict(self)}


def check_axiom1(fam: GraphFamily, s: SequenceSpec | list[int]) -> Axiom1Result:
    """Compare the number of vertices added at each step with ``s_n``."""
    actual = fam.new_counts()
    expected = _as_values(s, len(actual))
    rows = list(zip(range(len(actual)), expected, actual))
    bad = next((row for row in rows if row[1] != row[2]), None)
    return Axiom1Result(FAIL if bad else PASS, rows, bad)


def check_axiom2(
    fam: GraphFamily,
    n: int,
    method: str = "expanded",
    limit: int = DEFAULT_SIZE_LIMIT,
) -> Axiom2Result:
    """Match the subtree at every vertex of ``G_n`` against ``G_0..G_n``.

    A vertex labeled ``j`` must be the root of a copy of some ``G_k``
    with labels raised by ``j``; ``k = n - j`` is expected and any other
    match is flagged in the result.  ``method="condensed"`` compares
    canonical condensed subtrees instead of expanding the graphs.
    """
    if not 0 <= n <= fam.n_max:
        raise ValueError(f"family has steps 0..{fam.n_max}, asked for {n}")
    if method == "expanded":
        try:
            graphs = [expand(g, limit) for g in fam.graphs[: n + 1]]
        except SizeLimitExceeded:
            return Axiom2Result(NOT_CHECKED, n, method)
    elif method == "condensed":
        graphs = [canonicalize(g) for g in fam.graphs[: n + 1]]
    else:
        raise ValueError(f"unknown method {method!r}")

    by_code: dict[str, int] = {}
    for k, g in enumerate(graphs):
        by_code.setdefault(g.code, k)

    target = graphs[n]
    tally: Counter[tuple[int, int, int | None]] = Counter()
    counterexample = None
    for node in target.preorder:
        label = target.labels[node]
        k = by_code.get(target.codes[node])
        if k is None and counterexample is None:
            counterexample = node
        tally[target.depth[node], label, k] += target.counts[node]

    def order(key: tuple[int, int, int | None]) -> tuple[int, int, int]:
        depth, label, k = key
        return depth, label, -1 if k is None else k

    matches = [
        Axiom2Match(depth, label, k, tally[depth, label, k], n - label)
        for depth, label, k in sorted(tally, key=order)
    ]
    status = FAIL if counterexample is not None else PASS
    return Axiom2Result(status, n, method, matches, counterexample)


def check_axiom3(fam: GraphFamily, n: int) -> Axiom3Result:
    g = fam.graphs[n]
    if leaves_all_labeled(g, n):
        return Axiom3Result(PASS, n)
    bad = [(leaf, g.labels[leaf]) for leaf in g.leaves() if g.labels[leaf] != n]
    return Axiom3Result(FAIL, n, bad)


def check_axioms(
    fam: GraphFamily,
    s: SequenceSpec | list[int],
    method: str = "expanded",
    limit: int = DEFAULT_SIZE_LIMIT,
) -> AxiomReport:
    """All three axioms on every step of ``fam``."""
    steps = range(fam.n_max + 1)
    return AxiomReport(
        check_axiom1(fam, s),
        [check_axiom2(fam, n, method, limit) for n in steps],
        [check_axiom3(fam, n) for n in steps],
    )


@dataclass
class GateReport:
    verdict: str
    """``"feasible-so-far"`` or ``"infeasible"``."""
    violated: str | None
    """``None``, ``"lemma_s0"`` or ``"lemma_square"``."""
    witness: dict[str, int]

    @property
    def feasible(self) -> bool:
        return self.verdict == "feasible-so-far"

    def to_json(self) -> dict:
        return {"type": "gate", **asdict(self)}

    def describe(self) -> str:
        w = self.witness
        if self.violated == "lemma_s0":
            return f"infeasible (lemma_s0): s_0 = {w['s0']} but must be 1"
        if self.violated == "lemma_square":
            return f"infeasible (lemma_square): s_1^2 = {w['s1_squared']} > s_2 = {w['s2']}"
        return f"feasible so far: s_0 = 1, s_1^2 = {w['s1_squared']} <= s_2 = {w['s2']}"


def gate(s: SequenceSpec | list[int], terms: int = 3) -> GateReport:
    """Necessary conditions only; passing proves nothing about existence."""
    if terms < 3:
        raise ValueError("the gate needs at least 3 terms")
    s0, s1, s2 = _as_values(s, 3)
    witness = {"s0": s0, "s1": s1, "s2": s2, "s1_squared": s1 * s1}
    if s0 != 1:
        return GateReport("infeasible", "lemma_s0", witness)
    if s2 < s1 * s1:
        return GateReport("infeasible", "lemma_square", witness)
    return GateReport("feasible-so-far", None, witness)
