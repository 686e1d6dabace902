"""Lower and upper bounds on the minimum vertex cover size of a graph.

Every lower bound here is a valid upper bound on the independence number
turned around (cover size = n - independent set size), so all bounds are
safe on every input. Bounds are pure functions of the graph and fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, complement

__all__ = [
    "BoundsReport",
    "BoundConfig",
    "LOWER_METHODS",
    "UPPER_METHODS",
    "lb_matching_half",
    "lb_min_degree",
    "lb_spectral",
    "lb_coloring",
    "ub_greedy_clique",
    "combine_bounds",
    "register_lower_bound",
]

LOWER_METHODS = ("matching_half", "spectral", "min_degree", "coloring")
UPPER_METHODS = ("greedy_clique", "decomposition_incumbent")

# name -> Graph -> int; extension point for additional lower bounds
# (an SDP-based bound, say) without touching the solver
_LOWER_REGISTRY: dict = {}


def register_lower_bound(name: str, fn) -> None:
    """Make an extra lower-bound method available to BoundConfig."""
    if name in _LOWER_REGISTRY or name in ("greedy_clique", "decomposition_incumbent"):
        raise ValueError(f"bound method {name!r} already registered")
    _LOWER_REGISTRY[name] = fn


@dataclass(frozen=True)
class BoundConfig:
    """Which bound methods are active. Empty sets fall back to 0 and n."""

    lower_methods: frozenset[str] = frozenset(("coloring",))
    upper_methods: frozenset[str] = frozenset(("decomposition_incumbent",))

    def __post_init__(self):
        object.__setattr__(self, "lower_methods", frozenset(self.lower_methods))
        object.__setattr__(self, "upper_methods", frozenset(self.upper_methods))
        for name in self.lower_methods:
            if name not in LOWER_METHODS and name not in _LOWER_REGISTRY:
                raise ValueError(f"unknown lower bound method {name!r}")
        for name in self.upper_methods:
            if name not in UPPER_METHODS:
                raise ValueError(f"unknown upper bound method {name!r}")

    @classmethod
    def none(cls) -> "BoundConfig":
        return cls(frozenset(), frozenset())

    @classmethod
    def all(cls) -> "BoundConfig":
        return cls(frozenset(LOWER_METHODS), frozenset(UPPER_METHODS))


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    lower_parts: dict[str, int] = field(default_factory=dict)
    upper_parts: dict[str, int] = field(default_factory=dict)
    witness_cover: frozenset[int] | None = None


def lb_matching_half(g: Graph) -> int:
    """Size of a greedy maximal matching; every cover hits each matched edge."""
    matched = 0
    taken = 0  # bitmask of matched vertices
    for u, v in g.edges():
        if not (taken >> u) & 1 and not (taken >> v) & 1:
            taken |= (1 << u) | (1 << v)
            matched += 1
    return matched


def lb_min_degree(g: Graph) -> int:
    """Minimum degree; any independent set leaves at least that many outside."""
    if g.n == 0:
        return 0
    return min(g.degrees)


def lb_spectral(g: Graph) -> int:
    """Eigenvalue inertia bound: independent sets have at most n0 + min(n+, n-) vertices."""
    n = g.n
    if n == 0 or g.m == 0:
        return 0
    a = np.zeros((n, n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    try:
        eigs = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError:
        return 0  # degraded: fall back to the trivial bound
    tol = 1e-8 * float(np.max(np.abs(eigs)))
    n_zero = int(np.sum(np.abs(eigs) <= tol))
    n_pos = int(np.sum(eigs > tol))
    n_neg = n - n_zero - n_pos
    return max(0, n - (n_zero + min(n_pos, n_neg)))


def _greedy_color_count(g: Graph) -> int:
    """Colors used by greedy coloring, largest degree first, ties by id."""
    if g.n == 0:
        return 0
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    masks = g.adjacency_masks
    color_members: list[int] = []  # bitmask of vertices per color class
    for v in order:
        for i, members in enumerate(color_members):
            if not members & masks[v]:
                color_members[i] |= 1 << v
                break
        else:
            color_members.append(1 << v)
    return len(color_members)


def lb_coloring(g: Graph) -> int:
    """n minus a greedy proper coloring of the complement.

    The coloring count bounds the complement's clique number from above,
    hence the independence number of g, hence the cover size from below.
    """
    k = _greedy_color_count(complement(g))
    return max(0, g.n - k)


def ub_greedy_clique(g: Graph) -> tuple[int, frozenset[int]]:
    """Cover from a greedy maximal clique of the complement.

    The clique is an independent set of g, so everything outside it is a
    vertex cover. Returns (cover size, cover).
    """
    comp = complement(g)
    order = sorted(comp.vertices(), key=lambda v: (-comp.degree(v), v))
    masks = comp.adjacency_masks
    clique = 0  # bitmask
    for v in order:
        if clique & ~masks[v] == 0:
            clique |= 1 << v
    cover = frozenset(v for v in g.vertices() if not (clique >> v) & 1)
    return len(cover), cover


def combine_bounds(
    g: Graph, cfg: BoundConfig, incumbent: int | None = None
) -> BoundsReport:
    """Best enabled lower and upper bounds, with the trivial 0 and n fallbacks.

    ``incumbent`` feeds the decomposition bound: the best complete cover seen
    so far, expressed as a budget for this graph. The greedy-clique witness
    is kept only when it attains the reported upper bound.
    """
    lower_fns = {
        "matching_half": lb_matching_half,
        "spectral": lb_spectral,
        "min_degree": lb_min_degree,
        "coloring": lb_coloring,
        **_LOWER_REGISTRY,
    }
    lower_parts = {
        name: lower_fns[name](g) for name in sorted(cfg.lower_methods)
    }
    lower = max(lower_parts.values(), default=0)

    upper_parts: dict[str, int] = {}
    witness: frozenset[int] | None = None
    if "greedy_clique" in cfg.upper_methods:
        size, cover = ub_greedy_clique(g)
        upper_parts["greedy_clique"] = size
        witness = cover
    if "decomposition_incumbent" in cfg.upper_methods and incumbent is not None:
        upper_parts["decomposition_incumbent"] = incumbent
    upper = min(list(upper_parts.values()) + [g.n])
    if witness is not None and len(witness) != upper:
        witness = None
    return BoundsReport(
        lower=lower,
        upper=upper,
        lower_parts=lower_parts,
        upper_parts=upper_parts,
        witness_cover=witness,
    )
