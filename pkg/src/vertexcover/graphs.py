"""Undirected simple graphs: representation, generators, and file formats.

Vertex ids are always the dense range 0..n-1. Parsers normalize arbitrary
input labels to that range; ``VertexMapping`` tracks provenance when a graph
is carved out of a larger one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "VertexMapping",
    "GraphParseError",
    "parse_graph",
    "serialize_graph",
    "complement",
    "induced_subgraph",
    "random_graph",
    "random_graph_avg_degree",
    "FORMATS",
]

FORMATS = ("dimacs", "edge_list", "matrix_market")


class GraphParseError(ValueError):
    """Raised on malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Adjacency is a tuple of frozensets, one per vertex. Instances are safe
    to share across threads.
    """

    adjacency: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, for hot loops."""
        return tuple(
            sum(1 << u for u in nbrs) for nbrs in self.adjacency
        )

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a Graph, dropping self-loops and collapsing duplicates."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(tuple(frozenset(s) for s in adj))


@dataclass(frozen=True)
class VertexMapping:
    """Maps subgraph vertex ids to ids of the graph they were carved from."""

    forward: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.forward)) != len(self.forward):
            raise ValueError("vertex mapping must be injective")

    @classmethod
    def identity(cls, n: int) -> "VertexMapping":
        return cls(tuple(range(n)))

    def original(self, v: int) -> int:
        return self.forward[v]

    def originals(self, vs: Iterable[int]) -> set[int]:
        return {self.forward[v] for v in vs}

    def compose(self, outer: "VertexMapping") -> "VertexMapping":
        """Mapping for a subgraph of a subgraph: self indexes into outer."""
        return VertexMapping(tuple(outer.forward[v] for v in self.forward))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the missing edges."""
    n = g.n
    full = frozenset(range(n))
    return Graph(
        tuple((full - g.adjacency[v]) - {v} for v in range(n))
    )


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, VertexMapping]:
    """Subgraph on ``keep``, renumbered to 0..k-1 in ascending original order."""
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph of size {g.n}")
    index = {orig: new for new, orig in enumerate(kept)}
    adj = tuple(
        frozenset(index[u] for u in g.adjacency[orig] if u in index)
        for orig in kept
    )
    return Graph(adj), VertexMapping(tuple(kept))


def random_graph(n: int, density: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with p = density, deterministic per seed."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    draws = rng.random(len(pairs))
    edges = [pair for pair, r in zip(pairs, draws) if r < density]
    return build_graph(n, edges)


def random_graph_avg_degree(n: int, avg_degree: float, seed: int) -> Graph:
    """Random graph with expected average degree, via p = avg_degree/(n-1)."""
    if avg_degree < 0 or avg_degree > max(n - 1, 0):
        raise ValueError(
            f"average degree must be in [0, {max(n - 1, 0)}], got {avg_degree}"
        )
    p = avg_degree / (n - 1) if n > 1 else 0.0
    return random_graph(n, p, seed)


# -- parsing ----------------------------------------------------------------

def parse_graph(text: str, format: str = "dimacs") -> Graph:
    """Parse graph text in one of the supported formats.

    Duplicate edges are collapsed and self-loops dropped; vertex ids are
    normalized to 0..n-1 preserving input order.
    """
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edge_list":
        return _parse_edge_list(text)
    if format == "matrix_market":
        return _parse_matrix_market(text)
    raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        saw_content = True
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(fields) < 4 or fields[1] != "edge":
                raise GraphParseError(f"malformed header {line!r}", lineno)
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise GraphParseError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(fields) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"vertex index out of declared range 1..{n}", lineno
                )
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphParseError(
            "empty input" if not saw_content else "missing problem line", 1
        )
    return build_graph(n, edges)


def _parse_edge_list(text: str) -> Graph:
    label_to_id: dict[int, int] = {}
    edges: list[tuple[int, int]] = []

    def intern(label: int) -> int:
        if label not in label_to_id:
            label_to_id[label] = len(label_to_id)
        return label_to_id[label]

    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("%"):
            continue
        saw_content = True
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        edges.append((intern(a), intern(b)))
    if not saw_content:
        raise GraphParseError("empty input", 1)
    return build_graph(len(label_to_id), edges)


def _parse_matrix_market(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError("empty input", 1)
    header = lines[0].split()
    if (
        len(header) < 3
        or not header[0].startswith("%%MatrixMarket")
        or header[1] != "matrix"
        or header[2] != "coordinate"
    ):
        raise GraphParseError(f"malformed header {lines[0]!r}", 1)
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 3:
                raise GraphParseError(f"malformed size line {line!r}", lineno)
            try:
                rows, cols, _ = (int(f) for f in fields)
            except ValueError:
                raise GraphParseError(f"malformed size line {line!r}", lineno) from None
            if rows != cols:
                raise GraphParseError(
                    f"adjacency matrix must be square, got {rows}x{cols}", lineno
                )
            n = rows
            continue
        if len(fields) not in (2, 3):
            raise GraphParseError(f"malformed entry {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"malformed entry {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"entry index out of range 1..{n}", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise GraphParseError("missing size line", 1)
    return build_graph(n, edges)


# -- serialization ----------------------------------------------------------

def serialize_graph(g: Graph, format: str = "dimacs") -> str:
    """Emit graph text that parses back to the same graph."""
    if format == "dimacs":
        lines = [f"c undirected graph, {g.n} vertices, {g.m} edges"]
        lines.append(f"p edge {g.n} {g.m}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if format == "edge_list":
        # A self-loop line registers a vertex and is dropped by the parser,
        # which is how isolated vertices survive the round trip.
        lines = [f"{u} {v}" for u, v in g.edges()]
        lines.extend(f"{v} {v}" for v in g.vertices() if g.degree(v) == 0)
        return "\n".join(lines) + "\n"
    if format == "matrix_market":
        lines = ["%%MatrixMarket matrix coordinate pattern symmetric"]
        lines.append(f"{g.n} {g.n} {g.m}")
        lines.extend(f"{v + 1} {u + 1}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")
