"""Recursive case split on a vertex: either it is in the cover or it is not.

Splitting a subproblem at vertex v yields two children. In the "plus" child
v is taken into the cover and deleted; in the "minus" child v is excluded,
which forces all its neighbors into the cover, so v and its whole
neighborhood are deleted. The two cases are exhaustive, so the optimum of
the parent is the better of the two completions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .graphs import Graph, VertexMapping, induced_subgraph

__all__ = [
    "Subproblem",
    "SelectionStrategy",
    "SELECTION_KINDS",
    "select_vertex",
    "split",
]

SELECTION_KINDS = ("lowest_degree", "highest_degree", "median_degree", "random")


@dataclass(frozen=True)
class Subproblem:
    """A residual graph plus the bookkeeping to interpret it.

    ``committed`` holds original-graph vertex ids already decided to be in
    the cover; they never reappear in the residual graph.
    """

    graph: Graph
    mapping: VertexMapping
    committed: frozenset[int] = frozenset()
    depth: int = 0
    ordinal: int = 0

    @classmethod
    def root(cls, g: Graph) -> "Subproblem":
        return cls(graph=g, mapping=VertexMapping.identity(g.n))

    def original_ids(self) -> set[int]:
        return set(self.mapping.forward)


@dataclass(frozen=True)
class SelectionStrategy:
    """How to pick the split vertex; ties are broken by a seeded draw."""

    kind: str = "highest_degree"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in SELECTION_KINDS:
            raise ValueError(
                f"unknown selection kind {self.kind!r}; expected one of {SELECTION_KINDS}"
            )


def _tie_break_rng(strategy: SelectionStrategy, s: Subproblem) -> random.Random:
    # Mix (seed, depth, ordinal) into one integer so runs are reproducible
    # regardless of traversal interleaving.
    key = (strategy.seed * 1_000_003 + s.depth) * 1_000_003 + s.ordinal
    return random.Random(key)


def select_vertex(s: Subproblem, strategy: SelectionStrategy) -> int:
    """Pick the split vertex of the residual graph under the strategy."""
    g = s.graph
    if g.n == 0:
        raise ValueError("cannot select a vertex from an empty graph")
    degrees = g.degrees
    if strategy.kind == "random":
        candidates = list(g.vertices())
    elif strategy.kind == "lowest_degree":
        target = min(degrees)
        candidates = [v for v in g.vertices() if degrees[v] == target]
    elif strategy.kind == "highest_degree":
        target = max(degrees)
        candidates = [v for v in g.vertices() if degrees[v] == target]
    else:  # median_degree
        order = sorted(g.vertices(), key=lambda v: (degrees[v], v))
        target = degrees[order[len(order) // 2]]
        candidates = [v for v in g.vertices() if degrees[v] == target]
    if len(candidates) == 1:
        return candidates[0]
    return _tie_break_rng(strategy, s).choice(candidates)


def split(s: Subproblem, v: int) -> tuple[Subproblem, Subproblem]:
    """Split at v, returning the (v in cover, v out of cover) children."""
    g = s.graph
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} not in residual graph of size {g.n}")
    neighbors = g.neighbors(v)

    plus_keep = [u for u in g.vertices() if u != v]
    plus_graph, plus_local = induced_subgraph(g, plus_keep)
    s_plus = Subproblem(
        graph=plus_graph,
        mapping=plus_local.compose(s.mapping),
        committed=s.committed | {s.mapping.original(v)},
        depth=s.depth + 1,
        ordinal=s.ordinal,
    )

    dropped = neighbors | {v}
    minus_keep = [u for u in g.vertices() if u not in dropped]
    minus_graph, minus_local = induced_subgraph(g, minus_keep)
    s_minus = Subproblem(
        graph=minus_graph,
        mapping=minus_local.compose(s.mapping),
        committed=s.committed | {s.mapping.original(u) for u in neighbors},
        depth=s.depth + 1,
        ordinal=s.ordinal,
    )
    return s_plus, s_minus


def with_ordinal(s: Subproblem, ordinal: int) -> Subproblem:
    return replace(s, ordinal=ordinal)
