"""Inductive constructions of graph families from path-length rules.

A rule assigns to each path length ``l`` a non-negative rational ``r(l)``.
Going from step ``n-1`` to step ``n``, every vertex ``v`` receives
``sum_l p(v, l) * r(l)`` new children labeled ``n``, where ``p(v, l)`` is
the number of length-``l`` paths from ``v`` to vertices labeled ``n-1``.

Growth is computed on condensed nodes.  All copies of a condensed node have
the same subtree, so they all grow the same way, and the new children of a
node are all leaves with the same label; they become one new condensed
child whose multiplier is the per-vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import NonIntegralGrowth, RuleMissing
from .graph import (
    DEFAULT_SIZE_LIMIT,
    CondensedGraph,
    census,
    condense,
    expand,
    graph_from_json,
    graph_to_json,
)
from .sequences import binomial

__all__ = [
    "GraphFamily",
    "PathRules",
    "build_by_rules",
    "build_classic",
    "build_fuss",
    "build_super",
    "grow",
    "per_vertex_paths",
    "single_vertex",
]


@dataclass(frozen=True)
class PathRules:
    """Rules ``r(0), ..., r(L)`` as exact rationals."""

    values: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        vals = tuple(Fraction(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("path-length rules must be non-negative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, fn: Callable[[int], Fraction | int], max_length: int) -> PathRules:
        return cls(tuple(Fraction(fn(length)) for length in range(max_length + 1)))

    @classmethod
    def classic(cls, max_length: int) -> PathRules:
        return cls.from_function(lambda length: 1, max_length)

    @classmethod
    def fuss(cls, k: int, max_length: int) -> PathRules:
        if k < 1:
            raise ValueError("Fuss-Catalan rules need k >= 1")
        return cls.from_function(lambda length: binomial(length + k - 1, length), max_length)

    @classmethod
    def super_catalan(cls, max_length: int) -> PathRules:
        return cls.from_function(lambda length: Fraction(2, 2**length), max_length)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, length: int) -> Fraction:
        if not 0 <= length < len(self.values):
            raise RuleMissing(length)
        return self.values[length]

    def extended(self, value: Fraction | int) -> PathRules:
        return PathRules(self.values + (Fraction(value),))

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def to_json(self) -> list[str]:
        return [str(v) for v in self.values]


def single_vertex() -> CondensedGraph:
    return CondensedGraph((0,), (-1,), (1,))


def per_vertex_paths(g: CondensedGraph, target_label: int) -> list[dict[int, int]]:
    """``p[node][l]``: length-``l`` paths from one copy of ``node`` to
    vertices labeled ``target_label``."""
    paths: list[dict[int, int]] = [{} for _ in g.labels]
    parents, mults = g.parents, g.mults
    for node, label in enumerate(g.labels):
        if label != target_label:
            continue
        cur, length, per_copy = node, 0, 1
        while cur != -1:
            paths[cur][length] = paths[cur].get(length, 0) + per_copy
            per_copy *= mults[cur]
            cur = parents[cur]
            length += 1
    return paths


def grow(g: CondensedGraph, step: int, rules: PathRules) -> CondensedGraph:
    """One construction step: add the vertices labeled ``step``.

    Node ids of ``g`` are kept, new nodes are appended in parent order.
    """
    paths = per_vertex_paths(g, step - 1)
    labels = list(g.labels)
    parents = list(g.parents)
    mults = list(g.mults)
    for node, by_length in enumerate(paths):
        if not by_length:
            continue
        added = Fraction(0)
        for length in sorted(by_length):
            added += by_length[length] * rules(length)
        if added.denominator != 1 or added < 0:
            raise NonIntegralGrowth(step, node, g.labels[node], added)
        if added:
            labels.append(step)
            parents.append(node)
            mults.append(added.numerator)
    return CondensedGraph(tuple(labels), tuple(parents), tuple(mults))


@dataclass
class GraphFamily:
    """Graphs ``G_0, ..., G_n`` of one construction, in condensed form."""

    kind: str
    params: dict = field(default_factory=dict)
    graphs: list[CondensedGraph] = field(default_factory=list)
    target: tuple[int, ...] | None = None

    @property
    def n_max(self) -> int:
        return len(self.graphs) - 1

    def new_counts(self) -> list[int]:
        """Vertices added at each step; entry 0 is the size of ``G_0``."""
        return [census(g).get(n, 0) for n, g in enumerate(self.graphs)]

    def first_mismatch(self) -> tuple[int, int, int] | None:
        """``(step, expected, actual)`` for the first step off ``target``."""
        if self.target is None:
            return None
        for n, (want, got) in enumerate(zip(self.target, self.new_counts())):
            if want != got:
                return n, want, got
        return None

    def to_json(self, expanded: bool = False, limit: int | None = None) -> dict:
        lim = DEFAULT_SIZE_LIMIT if limit is None else limit
        graphs = [expand(g, lim) if expanded else g for g in self.graphs]
        params = {k: (v.to_json() if isinstance(v, PathRules) else v) for k, v in self.params.items()}
        return {
            "kind": self.kind,
            "params": params,
            "graphs": [graph_to_json(g) for g in graphs],
        }

    @classmethod
    def from_json(cls, data: dict) -> GraphFamily:
        graphs = [graph_from_json(g) for g in data["graphs"]]
        graphs = [g if isinstance(g, CondensedGraph) else condense(g) for g in graphs]
        params = dict(data.get("params", {}))
        if "rules" in params:
            params["rules"] = PathRules(tuple(Fraction(v) for v in params["rules"]))
        return cls(data["kind"], params, graphs)


def build_by_rules(
    rules: PathRules,
    n_max: int,
    sequence: Sequence[int] | Iterable[int] | None = None,
    kind: str = "by_rules",
    params: dict | None = None,
) -> GraphFamily:
    """Build ``G_0..G_{n_max}`` from ``rules``.

    ``sequence`` is only recorded for comparison through
    :meth:`GraphFamily.first_mismatch`; it does not steer the build.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    graphs = [single_vertex()]
    for step in range(1, n_max + 1):
        graphs.append(grow(graphs[-1], step, rules))
    target = tuple(sequence) if sequence is not None else None
    if params is None:
        params = {"rules": rules}
    return GraphFamily(kind, params, graphs, target)


def build_classic(n_max: int) -> GraphFamily:
    return build_by_rules(PathRules.classic(n_max), n_max, kind="classic", params={})


def build_fuss(n_max: int, k: int) -> GraphFamily:
    return build_by_rules(PathRules.fuss(k, n_max), n_max, kind="fuss", params={"k": k})


def build_super(n_max: int) -> GraphFamily:
    return build_by_rules(PathRules.super_catalan(n_max), n_max, kind="super", params={})
