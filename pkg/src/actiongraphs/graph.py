"""Labeled rooted trees in expanded and condensed (multiplicity-weighted) form.

Both forms store a tree as parallel tuples indexed by node id: ``labels``,
``parents`` (``-1`` at the root) and, for the condensed form, ``mults``
(the in-multiplier of each node, 1 at the root).  A condensed node stands
for ``counts[node]`` vertices of the expanded tree, the product of the
multipliers on its root path.

Canonical codes are AHU-style strings built bottom-up.  Child labels are
stored relative to the parent label, so two trees have equal codes exactly
when they are isomorphic up to a constant label shift, and an expanded tree
has the same code as any condensed form of it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import SizeLimitExceeded, UnknownVertex

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "CondensedGraph",
    "ExpandedGraph",
    "canonicalize",
    "census",
    "condense",
    "count_paths",
    "expand",
    "graph_from_json",
    "graph_to_json",
    "iso_shifted",
    "leaves_all_labeled",
    "path_table",
    "subtree_at",
    "to_dot",
]

DEFAULT_SIZE_LIMIT = 10**6


@dataclass(frozen=True)
class _RootedTree:
    labels: tuple[int, ...]
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise ValueError("a graph needs at least one vertex")
        if len(self.parents) != n:
            raise ValueError("labels and parents must have the same length")
        roots = [i for i, p in enumerate(self.parents) if p == -1]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        for child, parent in enumerate(self.parents):
            if parent == -1:
                continue
            if not 0 <= parent < n:
                raise ValueError(f"vertex {child} has unknown parent {parent}")
            # strictly increasing labels also rule out cycles
            if self.labels[parent] >= self.labels[child]:
                raise ValueError(
                    f"edge {parent}->{child} does not increase the label "
                    f"({self.labels[parent]} -> {self.labels[child]})"
                )
        if any(label < 0 for label in self.labels):
            raise ValueError("labels must be non-negative")

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def root(self) -> int:
        return self.parents.index(-1)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.labels]
        for child, parent in enumerate(self.parents):
            if parent != -1:
                kids[parent].append(child)
        return tuple(tuple(k) for k in kids)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(p, c) for c, p in enumerate(self.parents) if p != -1]

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(self.children[node]))
        return tuple(out)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * len(self.labels)
        for node in self.preorder:
            parent = self.parents[node]
            if parent != -1:
                d[node] = d[parent] + 1
        return tuple(d)

    @cached_property
    def codes(self) -> tuple[str, ...]:
        """Canonical code of the subtree below every node."""
        return _canonical_codes(self)

    @property
    def code(self) -> str:
        return self.codes[self.root]

    def leaves(self) -> Iterator[int]:
        return (i for i, kids in enumerate(self.children) if not kids)

    # overridden by CondensedGraph
    @property
    def mults(self) -> tuple[int, ...]:
        return (1,) * len(self.labels)

    @property
    def counts(self) -> tuple[int, ...]:
        return (1,) * len(self.labels)

    @property
    def size(self) -> int:
        """Number of vertices the tree stands for in expanded form."""
        return len(self.labels)


@dataclass(frozen=True)
class ExpandedGraph(_RootedTree):
    """Explicit labeled rooted tree, one node per vertex."""


@dataclass(frozen=True)
class CondensedGraph(_RootedTree):
    """Rooted tree whose nodes carry an in-multiplier ``x m``."""

    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.mults:
            object.__setattr__(self, "mults", (1,) * len(self.labels))
        super().__post_init__()
        if len(self.mults) != len(self.labels):
            raise ValueError("mults must have one entry per node")
        for node, m in enumerate(self.mults):
            if node == self.root:
                if m != 1:
                    raise ValueError("the root multiplier must be 1")
            elif not isinstance(m, int) or m < 1:
                raise ValueError(f"node {node} has invalid multiplier {m!r}")

    @cached_property
    def counts(self) -> tuple[int, ...]:
        c = [1] * len(self.labels)
        for node in self.preorder:
            parent = self.parents[node]
            if parent != -1:
                c[node] = c[parent] * self.mults[node]
        return tuple(c)

    @property
    def size(self) -> int:
        return sum(self.counts)


def _canonical_codes(g: _RootedTree) -> tuple[str, ...]:
    labels, mults = g.labels, g.mults
    codes: list[str] = [""] * len(labels)
    for node in reversed(g.preorder):
        groups: dict[tuple[int, str], int] = defaultdict(int)
        for c in g.children[node]:
            groups[labels[c] - labels[node], codes[c]] += mults[c]
        parts = [f"{delta}x{m}{code}" for (delta, code), m in sorted(groups.items())]
        codes[node] = "[" + "".join(parts) + "]"
    return tuple(codes)


def _canonical_condensed(g: _RootedTree) -> CondensedGraph:
    """Merge isomorphic sibling subtrees and renumber in canonical preorder."""
    codes = g.codes
    labels: list[int] = []
    parents: list[int] = []
    mults: list[int] = []
    stack = [(g.root, -1, 1)]
    while stack:
        node, parent, mult = stack.pop()
        new_id = len(labels)
        labels.append(g.labels[node])
        parents.append(parent)
        mults.append(mult)
        groups: dict[tuple[int, str], list[int]] = {}
        for c in g.children[node]:
            key = (g.labels[c], codes[c])
            if key in groups:
                groups[key][1] += g.mults[c]
            else:
                groups[key] = [c, g.mults[c]]
        for key in sorted(groups, reverse=True):
            rep, m = groups[key]
            stack.append((rep, new_id, m))
    return CondensedGraph(tuple(labels), tuple(parents), tuple(mults))


def condense(g: ExpandedGraph) -> CondensedGraph:
    """Collapse isomorphic sibling subtrees into single nodes with multipliers.

    Children are ordered by (label, canonical code) so that equal trees
    condense to identical objects.
    """
    return _canonical_condensed(g)


def canonicalize(g: CondensedGraph) -> CondensedGraph:
    return _canonical_condensed(g)


def expand(g: CondensedGraph, limit: int = DEFAULT_SIZE_LIMIT) -> ExpandedGraph:
    size = g.size
    if size > limit:
        raise SizeLimitExceeded(size, limit)
    labels: list[int] = []
    parents: list[int] = []
    stack = [(g.root, -1)]
    while stack:
        node, parent = stack.pop()
        vid = len(labels)
        labels.append(g.labels[node])
        parents.append(parent)
        for c in reversed(g.children[node]):
            stack.extend([(c, vid)] * g.mults[c])
    return ExpandedGraph(tuple(labels), tuple(parents))


def subtree_at(g: _RootedTree, v: int) -> _RootedTree:
    """Subtree rooted at ``v`` with labels unchanged; ``v`` becomes node 0."""
    if not 0 <= v < len(g.labels):
        raise UnknownVertex(v)
    old_ids: list[int] = []
    new_id: dict[int, int] = {}
    stack = [v]
    while stack:
        node = stack.pop()
        new_id[node] = len(old_ids)
        old_ids.append(node)
        stack.extend(reversed(g.children[node]))
    labels = tuple(g.labels[i] for i in old_ids)
    parents = tuple(-1 if i == v else new_id[g.parents[i]] for i in old_ids)
    if isinstance(g, CondensedGraph):
        mults = tuple(1 if i == v else g.mults[i] for i in old_ids)
        return CondensedGraph(labels, parents, mults)
    return ExpandedGraph(labels, parents)


def iso_shifted(g1: _RootedTree, g2: _RootedTree, shift: int) -> bool:
    """True iff ``g1`` is ``g2`` with every label raised by ``shift``."""
    if g1.labels[g1.root] - g2.labels[g2.root] != shift:
        return False
    return g1.size == g2.size and g1.code == g2.code


def census(g: _RootedTree) -> dict[int, int]:
    """Represented vertex count per label, in label order."""
    out: dict[int, int] = defaultdict(int)
    for label, count in zip(g.labels, g.counts):
        out[label] += count
    return dict(sorted(out.items()))


def leaves_all_labeled(g: _RootedTree, n: int) -> bool:
    return all(g.labels[leaf] == n for leaf in g.leaves())


def count_paths(g: _RootedTree, from_label: int, to_label: int, length: int) -> int:
    """Number of directed paths of exactly ``length`` edges from any vertex
    labeled ``from_label`` to any vertex labeled ``to_label``.

    Every represented copy of an endpoint node is the end of exactly one
    path from each of its ancestors, so the answer is a sum of node counts.
    """
    if length < 0:
        return 0
    total = 0
    counts, parents, labels = g.counts, g.parents, g.labels
    for node, label in enumerate(labels):
        if label != to_label:
            continue
        cur = node
        for _ in range(length):
            cur = parents[cur]
            if cur == -1:
                break
        if cur != -1 and labels[cur] == from_label:
            total += counts[node]
    return total


def path_table(g: _RootedTree, to_label: int) -> list[list[int]]:
    """``K[length][label]`` path counts into vertices labeled ``to_label``.

    The table is ``(to_label + 1)`` square; entries with a larger source
    label or length are always zero because labels increase along edges.
    """
    size = to_label + 1
    table = [[0] * size for _ in range(size)]
    counts, parents, labels = g.counts, g.parents, g.labels
    for node, label in enumerate(labels):
        if label != to_label:
            continue
        c = counts[node]
        cur, length = node, 0
        while cur != -1:
            table[length][labels[cur]] += c
            cur = parents[cur]
            length += 1
    return table


def graph_to_json(g: _RootedTree) -> dict:
    form = "condensed" if isinstance(g, CondensedGraph) else "expanded"
    return {
        "form": form,
        "nodes": [
            {"id": i, "label": label, "mult": m}
            for i, (label, m) in enumerate(zip(g.labels, g.mults))
        ],
        "edges": [[p, c] for p, c in g.edges],
        "root": g.root,
    }


def graph_from_json(data: dict) -> _RootedTree:
    form = data.get("form")
    if form not in ("expanded", "condensed"):
        raise ValueError(f"unknown graph form {form!r}")
    nodes = data["nodes"]
    index = {node["id"]: i for i, node in enumerate(nodes)}
    if len(index) != len(nodes):
        raise ValueError("duplicate node ids")
    parents = [-1] * len(nodes)
    for parent, child in data["edges"]:
        ci = index[child]
        if parents[ci] != -1:
            raise ValueError(f"node {child} has more than one parent")
        parents[ci] = index[parent]
    if parents[index[data["root"]]] != -1:
        raise ValueError("the root must not have a parent")
    labels = tuple(int(node["label"]) for node in nodes)
    if form == "expanded":
        if any(int(node.get("mult", 1)) != 1 for node in nodes):
            raise ValueError("expanded graphs cannot carry multipliers")
        return ExpandedGraph(labels, tuple(parents))
    mults = tuple(int(node.get("mult", 1)) for node in nodes)
    return CondensedGraph(labels, tuple(parents), mults)


def to_dot(g: _RootedTree, name: str = "G") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i, label in enumerate(g.labels):
        lines.append(f'  n{i} [label="{label}"];')
    condensed = isinstance(g, CondensedGraph)
    for p, c in g.edges:
        if condensed:
            lines.append(f'  n{p} -> n{c} [label="×{g.mults[c]}"];')
        else:
            lines.append(f"  n{p} -> n{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
