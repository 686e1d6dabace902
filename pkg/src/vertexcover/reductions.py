"""Size reductions that decide cover membership for forced vertices.

Each reduction rewrites a subproblem into a smaller one plus a tracked
contribution to the cover size, preserving the optimal total: some optimal
cover of the input extends every commitment made here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import induced_subgraph
from .splitting import Subproblem

__all__ = [
    "ReductionOutcome",
    "REDUCTION_NAMES",
    "reduce_neighbor",
    "reduce_dominance",
    "reduce_chain",
    "register_reduction",
    "known_reductions",
]

REDUCTION_NAMES = ("neighbor", "dominance")


@dataclass(frozen=True)
class ReductionOutcome:
    reduced: Subproblem
    removed_vertices: int
    cover_contribution: int


def _rebuild(s: Subproblem, alive: set[int], new_committed: set[int]) -> Subproblem:
    graph, local = induced_subgraph(s.graph, alive)
    return Subproblem(
        graph=graph,
        mapping=local.compose(s.mapping),
        committed=s.committed | new_committed,
        depth=s.depth,
        ordinal=s.ordinal,
    )


def _outcome(s: Subproblem, alive: set[int], committed: set[int]) -> ReductionOutcome:
    removed = s.graph.n - len(alive)
    if removed == 0:
        return ReductionOutcome(s, 0, 0)
    return ReductionOutcome(_rebuild(s, alive, committed), removed, len(committed))


def reduce_neighbor(s: Subproblem) -> ReductionOutcome:
    """Strip degree-0 vertices, pendant edges, and low-degree triangles.

    Pendant vertex v with neighbor u: u covers the edge, so commit u and
    drop both. Triangle {a, b, c} with a and b of degree exactly 2: c
    together with one of a, b covers all three edges (c also dominates b),
    so commit {c, a} and drop the triangle.
    """
    adj = {v: set(s.graph.neighbors(v)) for v in s.graph.vertices()}
    committed: set[int] = set()

    def drop(v: int):
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]

    changed = True
    while changed:
        changed = False
        isolated = [v for v, nbrs in adj.items() if not nbrs]
        for v in isolated:
            drop(v)
            changed = True
        if changed:
            continue
        pendant = next(
            (v for v in sorted(adj) if len(adj[v]) == 1), None
        )
        if pendant is not None:
            u = next(iter(adj[pendant]))
            committed.add(s.mapping.original(u))
            drop(pendant)
            drop(u)
            changed = True
            continue
        for a in sorted(adj):
            if len(adj[a]) != 2:
                continue
            u, w = sorted(adj[a])
            if u not in adj[w]:
                continue
            if len(adj[u]) == 2:
                b, c = u, w
            elif len(adj[w]) == 2:
                b, c = w, u
            else:
                continue
            committed.add(s.mapping.original(c))
            committed.add(s.mapping.original(a))
            for x in (a, b, c):
                drop(x)
            changed = True
            break

    return _outcome(s, set(adj), committed)


def reduce_dominance(s: Subproblem) -> ReductionOutcome:
    """Commit v whenever some neighbor u has its closed neighborhood inside v's.

    Any cover must hit the edge (u, v); if it does so via u only, swapping
    u for v still covers everything u covered, so some optimal cover
    contains v.
    """
    adj = {v: set(s.graph.neighbors(v)) for v in s.graph.vertices()}
    committed: set[int] = set()

    def drop(v: int):
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]

    changed = True
    while changed:
        changed = False
        for u in sorted(adj):
            dominator = next(
                (v for v in sorted(adj[u]) if (adj[u] - {v}) <= adj[v]), None
            )
            if dominator is not None:
                committed.add(s.mapping.original(dominator))
                drop(dominator)
                changed = True
                break

    return _outcome(s, set(adj), committed)


_REDUCERS = {
    "neighbor": reduce_neighbor,
    "dominance": reduce_dominance,
}


def register_reduction(name: str, fn) -> None:
    """Register an extra reduction (a persistency analysis, say) by name.

    The callable maps a Subproblem to a ReductionOutcome and must preserve
    the optimal total cover size.
    """
    if name in _REDUCERS:
        raise ValueError(f"reduction {name!r} already registered")
    _REDUCERS[name] = fn


def known_reductions() -> tuple[str, ...]:
    return tuple(_REDUCERS)


def reduce_chain(s: Subproblem, enabled: list[str] | tuple[str, ...]) -> ReductionOutcome:
    """Apply the named reductions in order, cycling until nothing changes."""
    for name in enabled:
        if name not in _REDUCERS:
            raise ValueError(
                f"unknown reduction {name!r}; expected one of {tuple(_REDUCERS)}"
            )
    current = s
    removed = 0
    contribution = 0
    progressing = True
    while progressing:
        progressing = False
        for name in enabled:
            outcome = _REDUCERS[name](current)
            if outcome.removed_vertices:
                progressing = True
                removed += outcome.removed_vertices
                contribution += outcome.cover_contribution
                current = outcome.reduced
    return ReductionOutcome(current, removed, contribution)
