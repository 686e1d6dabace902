"""The full solver: recursive splitting with pruning, reductions, and leaf dispatch.

The traversal is depth-first with the "vertex in cover" child explored
first. That child shrinks by one vertex per level, so a leaf is reached
quickly and its completed cover becomes the incumbent that prunes the rest
of the tree. Preprocessing time is the decomposition work alone; time spent
inside leaf solvers is excluded and modeled instead as a fixed cost per
dispatched leaf.
"""

from __future__ import annotations

import threading
import time
import warnings
from collections import defaultdict
from dataclasses import dataclass, field, replace

from .bounds import BoundConfig, combine_bounds, ub_greedy_clique
from .graphs import Graph
from .qubo import build_mvc_qubo, decode_cover, solve_anneal, solve_exhaustive
from .reductions import known_reductions, reduce_chain
from .splitting import SelectionStrategy, Subproblem, select_vertex, split

__all__ = [
    "SolveConfig",
    "SolveResult",
    "DecomposeResult",
    "DepthStats",
    "EngineError",
    "LEAF_SIZE_PRESETS",
    "LEAF_SOLVERS",
    "solve",
    "decompose_only",
    "exact_leaf_solve",
    "brute_force_oracle",
    "is_vertex_cover",
]

LEAF_SIZE_PRESETS = {"2x": 46, "2000q": 65, "pegasus": 180}
LEAF_SOLVERS = ("exact", "qubo_exhaustive", "qubo_anneal")
EXACT_LEAF_COMFORT_CAP = 64
ORACLE_CAP = 24


class EngineError(RuntimeError):
    """Solver abort, carrying a diagnostic for the failing subproblem."""


@dataclass(frozen=True)
class SolveConfig:
    """Everything that shapes a solve run.

    ``strategy`` defaults to highest-degree selection seeded by ``seed``.
    ``qpu_seconds_per_leaf`` is the modeled per-leaf annealer access cost
    used for the solution-time metric.
    """

    leaf_size: int = 46
    strategy: SelectionStrategy | None = None
    bounds: BoundConfig = field(default_factory=BoundConfig)
    reductions: tuple[str, ...] = ("neighbor",)
    leaf_solver: str = "exact"
    seed: int = 0
    qpu_seconds_per_leaf: float = 1.6
    anneal_reads: int = 100
    anneal_sweeps: int = 100

    def __post_init__(self):
        if self.leaf_size < 1:
            raise ValueError(f"leaf_size must be at least 1, got {self.leaf_size}")
        if self.leaf_solver not in LEAF_SOLVERS:
            raise ValueError(
                f"unknown leaf solver {self.leaf_solver!r}; expected one of {LEAF_SOLVERS}"
            )
        for name in self.reductions:
            if name not in known_reductions():
                raise ValueError(
                    f"unknown reduction {name!r}; expected one of {known_reductions()}"
                )
        if self.strategy is None:
            object.__setattr__(
                self, "strategy", SelectionStrategy(seed=self.seed)
            )


@dataclass(frozen=True)
class DepthStats:
    depth: int
    generated: int
    pruned: int
    leaves: int


@dataclass(frozen=True)
class SolveResult:
    cover: frozenset[int]
    size: int
    leaf_count: int
    subproblems_generated: int
    subproblems_pruned: int
    preprocessing_seconds: float
    solution_seconds: float
    per_depth_stats: tuple[DepthStats, ...]
    max_leaf_vertices: int = 0


@dataclass(frozen=True)
class DecomposeResult:
    leaves: tuple[Subproblem, ...]
    incumbent_cover: frozenset[int]
    subproblems_generated: int
    subproblems_pruned: int
    preprocessing_seconds: float
    per_depth_stats: tuple[DepthStats, ...]

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def incumbent_size(self) -> int:
        return len(self.incumbent_cover)


def is_vertex_cover(g: Graph, cover) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges())


# -- direct solvers ----------------------------------------------------------

def exact_leaf_solve(g: Graph) -> set[int]:
    """Exact minimum vertex cover by branching on a highest-degree vertex.

    Pendant and isolated vertices are resolved without branching; a greedy
    matching bound prunes against the best cover found so far.
    """
    n = g.n
    if n == 0:
        return set()
    if n > EXACT_LEAF_COMFORT_CAP:
        warnings.warn(
            f"exact cover search on {n} vertices may take a long time",
            RuntimeWarning,
            stacklevel=2,
        )
    masks = g.adjacency_masks
    best_size, best_cover = ub_greedy_clique(g)
    best = [best_size, set(best_cover)]

    def matching_bound(alive: int) -> int:
        bound = 0
        avail = alive
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            nbrs = masks[v] & avail
            if nbrs:
                avail &= ~(nbrs & -nbrs)
                bound += 1
        return bound

    def descend(alive: int, chosen: list[int], count: int):
        while True:
            if count >= best[0]:
                return
            max_deg = 0
            max_v = -1
            pendant = -1
            scan = alive
            while scan:
                v = (scan & -scan).bit_length() - 1
                scan &= scan - 1
                d = (masks[v] & alive).bit_count()
                if d == 1 and pendant < 0:
                    pendant = v
                if d > max_deg:
                    max_deg = d
                    max_v = v
            if max_deg == 0:
                if count < best[0]:
                    best[0] = count
                    best[1] = set(chosen)
                return
            if pendant >= 0:
                nb = masks[pendant] & alive
                u = (nb & -nb).bit_length() - 1
                chosen = chosen + [u]
                count += 1
                alive &= ~((1 << pendant) | (1 << u))
                continue
            break
        if count + matching_bound(alive) >= best[0]:
            return
        v = max_v
        nbrs = masks[v] & alive
        nbr_list = []
        scan = nbrs
        while scan:
            u = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            nbr_list.append(u)
        # exclude v first: committing the whole neighborhood shrinks fastest
        descend(alive & ~(nbrs | (1 << v)), chosen + nbr_list, count + len(nbr_list))
        descend(alive & ~(1 << v), chosen + [v], count + 1)

    descend((1 << n) - 1, [], 0)
    return best[1]


def brute_force_oracle(g: Graph) -> int:
    """Minimum cover size by enumerating vertex subsets in increasing cardinality.

    Deliberately a separate code path from the solvers so it can vouch for
    them. Enumeration starts at a counting lower bound (greedy matching and
    greedy clique partition), which skips only levels that cannot contain a
    cover.
    """
    n = g.n
    if n > ORACLE_CAP:
        raise ValueError(f"oracle capped at {ORACLE_CAP} vertices, got {n}")
    if g.m == 0:
        return 0
    masks = g.adjacency_masks
    full = (1 << n) - 1

    matching = 0
    taken = 0
    for u, v in g.edges():
        if not (taken >> u) & 1 and not (taken >> v) & 1:
            taken |= (1 << u) | (1 << v)
            matching += 1

    unused = full
    cliques = 0
    while unused:
        v = (unused & -unused).bit_length() - 1
        unused &= ~(1 << v)
        cand = masks[v] & unused
        while cand:
            w = (cand & -cand).bit_length() - 1
            unused &= ~(1 << w)
            cand &= masks[w] & unused
        cliques += 1

    def complement_independent(subset: int) -> bool:
        outside = full ^ subset
        scan = outside
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            if masks[v] & outside:
                return False
        return True

    for k in range(max(matching, n - cliques, 1), n + 1):
        subset = (1 << k) - 1
        while subset <= full:
            if complement_independent(subset):
                return k
            low = subset & -subset
            ripple = subset + low
            subset = (((ripple ^ subset) >> 2) // low) | ripple
    return n


# -- traversal ---------------------------------------------------------------

class _Incumbent:
    """Best complete cover seen so far; safe to update from worker threads."""

    def __init__(self, cover: frozenset[int]):
        self.cover = cover
        self.size = len(cover)
        self._lock = threading.Lock()

    def offer(self, cover: frozenset[int]) -> bool:
        with self._lock:
            if len(cover) < self.size:
                self.cover = cover
                self.size = len(cover)
                return True
        return False


class _Stats:
    def __init__(self):
        self.generated = defaultdict(int)
        self.pruned = defaultdict(int)
        self.leaves = defaultdict(int)
        self.leaf_count = 0
        self.max_leaf_vertices = 0
        self.leaf_seconds = 0.0
        self._lock = threading.Lock()

    def merge_leaf(self, depth: int, n_vertices: int, seconds: float):
        with self._lock:
            self.leaves[depth] += 1
            self.leaf_count += 1
            self.max_leaf_vertices = max(self.max_leaf_vertices, n_vertices)
            self.leaf_seconds += seconds

    def per_depth(self) -> tuple[DepthStats, ...]:
        depths = sorted(set(self.generated) | set(self.pruned) | set(self.leaves))
        return tuple(
            DepthStats(d, self.generated[d], self.pruned[d], self.leaves[d])
            for d in depths
        )


def _leaf_cover(graph: Graph, cfg: SolveConfig, leaf_seed: int) -> set[int]:
    if cfg.leaf_solver == "exact":
        return exact_leaf_solve(graph)
    q = build_mvc_qubo(graph)
    if cfg.leaf_solver == "qubo_exhaustive":
        assignment, _ = solve_exhaustive(q)
    else:
        assignment, _ = solve_anneal(
            q, reads=cfg.anneal_reads, sweeps=cfg.anneal_sweeps, seed=leaf_seed
        )
    return decode_cover(graph, assignment)


def _process_node(
    node: Subproblem,
    cfg: SolveConfig,
    incumbent: _Incumbent,
    stats: _Stats,
    counter: list[int],
    dispatch: bool,
    prune_on_equal: bool,
    leaves: list[Subproblem] | None,
) -> tuple[Subproblem, Subproblem] | None:
    """Handle one subproblem; returns children to push, if any."""
    if cfg.reductions:
        node = reduce_chain(node, cfg.reductions).reduced

    if node.graph.n <= cfg.leaf_size:
        if dispatch:
            t0 = time.perf_counter()
            try:
                local = _leaf_cover(node.graph, cfg, cfg.seed * 1_000_003 + node.ordinal)
            except Exception as exc:
                raise EngineError(
                    f"leaf solver {cfg.leaf_solver!r} failed on subproblem "
                    f"(depth={node.depth}, ordinal={node.ordinal}, "
                    f"n={node.graph.n}): {exc}"
                ) from exc
            elapsed = time.perf_counter() - t0
            total = node.committed | node.mapping.originals(local)
            incumbent.offer(frozenset(total))
            stats.merge_leaf(node.depth, node.graph.n, elapsed)
        else:
            stats.merge_leaf(node.depth, node.graph.n, 0.0)
            if leaves is not None:
                leaves.append(node)
        return None

    budget = None
    if "decomposition_incumbent" in cfg.bounds.upper_methods:
        budget = incumbent.size - len(node.committed)
    report = combine_bounds(node.graph, cfg.bounds, incumbent=budget)
    committed = len(node.committed)
    over = committed + report.lower - incumbent.size
    if over > 0 or (prune_on_equal and over == 0):
        with stats._lock:
            stats.pruned[node.depth] += 1
        return None
    if (
        report.witness_cover is not None
        and committed + len(report.witness_cover) < incumbent.size
    ):
        incumbent.offer(
            frozenset(node.committed | node.mapping.originals(report.witness_cover))
        )

    v = select_vertex(node, cfg.strategy)
    s_plus, s_minus = split(node, v)
    with stats._lock:
        counter[0] += 1
        s_plus = replace(s_plus, ordinal=counter[0])
        counter[0] += 1
        s_minus = replace(s_minus, ordinal=counter[0])
        stats.generated[s_plus.depth] += 2
    return s_plus, s_minus


def _run(
    g: Graph,
    cfg: SolveConfig,
    dispatch: bool,
    prune_on_equal: bool,
    collect_leaves: bool,
    threads: int,
):
    t_start = time.perf_counter()
    initial_size, initial_cover = ub_greedy_clique(g)
    incumbent = _Incumbent(frozenset(initial_cover))
    stats = _Stats()
    counter = [0]
    leaves: list[Subproblem] | None = [] if collect_leaves else None
    root = Subproblem.root(g)
    stats.generated[0] += 1

    if threads <= 1:
        stack = [root]
        while stack:
            node = stack.pop()
            children = _process_node(
                node, cfg, incumbent, stats, counter, dispatch, prune_on_equal, leaves
            )
            if children is not None:
                s_plus, s_minus = children
                stack.append(s_minus)
                stack.append(s_plus)
    else:
        _run_parallel(
            root, cfg, incumbent, stats, counter, dispatch, prune_on_equal, leaves, threads
        )

    wall = time.perf_counter() - t_start
    preprocessing = max(0.0, wall - stats.leaf_seconds)
    return incumbent, stats, preprocessing, leaves


def _run_parallel(
    root, cfg, incumbent, stats, counter, dispatch, prune_on_equal, leaves, threads
):
    stack: list[Subproblem] = [root]
    lock = threading.Lock()
    work_ready = threading.Condition(lock)
    active = [0]
    failures: list[BaseException] = []

    def worker():
        while True:
            with work_ready:
                while not stack and active[0] > 0 and not failures:
                    work_ready.wait()
                if failures or (not stack and active[0] == 0):
                    work_ready.notify_all()
                    return
                node = stack.pop()
                active[0] += 1
            try:
                children = _process_node(
                    node, cfg, incumbent, stats, counter, dispatch,
                    prune_on_equal, leaves,
                )
            except BaseException as exc:
                with work_ready:
                    failures.append(exc)
                    active[0] -= 1
                    work_ready.notify_all()
                return
            with work_ready:
                if children is not None:
                    stack.extend(children[::-1])
                active[0] -= 1
                work_ready.notify_all()

    pool = [threading.Thread(target=worker) for _ in range(threads)]
    for t in pool:
        t.start()
    for t in pool:
        t.join()
    if failures:
        raise failures[0]


def solve(g: Graph, cfg: SolveConfig | None = None, threads: int = 1) -> SolveResult:
    """Find a minimum vertex cover of g.

    Exact when the leaf solver is exact; with the annealing leaf solver the
    returned cover is always valid but optimal only with the leaf solver's
    own success probability. With ``threads > 1`` the cover size is still
    deterministic for a fixed seed, but node counts may vary between runs.
    """
    cfg = cfg or SolveConfig()
    incumbent, stats, preprocessing, _ = _run(
        g, cfg, dispatch=True, prune_on_equal=True, collect_leaves=False,
        threads=threads,
    )
    if not is_vertex_cover(g, incumbent.cover):
        raise EngineError("internal error: final cover failed validation")
    solution_seconds = preprocessing + cfg.qpu_seconds_per_leaf * stats.leaf_count
    return SolveResult(
        cover=incumbent.cover,
        size=incumbent.size,
        leaf_count=stats.leaf_count,
        subproblems_generated=sum(stats.generated.values()),
        subproblems_pruned=sum(stats.pruned.values()),
        preprocessing_seconds=preprocessing,
        solution_seconds=solution_seconds,
        per_depth_stats=stats.per_depth(),
        max_leaf_vertices=stats.max_leaf_vertices,
    )


def decompose_only(g: Graph, cfg: SolveConfig | None = None) -> DecomposeResult:
    """Decompose to leaves without solving them.

    Prunes only on a strict bound excess, so at least one optimal completion
    always survives among the returned leaves: the best of (committed count
    plus leaf optimum) over all leaves, together with the incumbent cover,
    recovers the exact optimum.
    """
    cfg = cfg or SolveConfig()
    incumbent, stats, preprocessing, leaves = _run(
        g, cfg, dispatch=False, prune_on_equal=False, collect_leaves=True, threads=1
    )
    return DecomposeResult(
        leaves=tuple(leaves or ()),
        incumbent_cover=incumbent.cover,
        subproblems_generated=sum(stats.generated.values()),
        subproblems_pruned=sum(stats.pruned.values()),
        preprocessing_seconds=preprocessing,
        per_depth_stats=stats.per_depth(),
    )
