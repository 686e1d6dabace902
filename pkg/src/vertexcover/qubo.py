"""Quadratic binary formulation of minimum vertex cover, and its solvers.

The cover problem becomes: minimize over x in {0,1}^n

    penalty_a * sum_over_edges (1 - x_u)(1 - x_v)  +  size_b * sum_v x_v

With 0 < size_b < penalty_a, leaving any edge uncovered always costs more
than adding a vertex, so minimizers are exactly the minimum covers and the
minimum value is size_b times the cover size. Expanded to coefficient form,
each vertex gets linear weight size_b - penalty_a * deg(v), each edge a
quadratic weight penalty_a, plus the constant penalty_a * |E|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph

__all__ = [
    "Qubo",
    "build_mvc_qubo",
    "evaluate",
    "solve_exhaustive",
    "solve_anneal",
    "decode_cover",
    "export_qubo",
    "parse_qubo",
    "EXHAUSTIVE_CAP",
]

EXHAUSTIVE_CAP = 30


@dataclass(frozen=True)
class Qubo:
    """Sparse quadratic binary objective: offset + linear.x + sum quad x_i x_j."""

    n: int
    linear: tuple[float, ...]
    quadratic: dict[tuple[int, int], float]
    offset: float = 0.0
    penalty_a: float = 2.0
    size_b: float = 1.0

    def __post_init__(self):
        if len(self.linear) != self.n:
            raise ValueError("linear coefficient count must equal n")
        for (i, j) in self.quadratic:
            if not (0 <= i < j < self.n):
                raise ValueError(f"quadratic key ({i}, {j}) must satisfy 0 <= i < j < n")


def build_mvc_qubo(g: Graph, penalty_a: float = 2.0, size_b: float = 1.0) -> Qubo:
    """Cover objective for g; requires 0 < size_b < penalty_a."""
    if not 0 < size_b < penalty_a:
        raise ValueError(
            f"need 0 < size_b < penalty_a, got size_b={size_b}, penalty_a={penalty_a}"
        )
    linear = tuple(float(size_b - penalty_a * g.degree(v)) for v in g.vertices())
    quadratic = {(u, v): float(penalty_a) for u, v in g.edges()}
    return Qubo(
        n=g.n,
        linear=linear,
        quadratic=quadratic,
        offset=float(penalty_a * g.m),
        penalty_a=float(penalty_a),
        size_b=float(size_b),
    )


def evaluate(q: Qubo, x: Sequence[int]) -> float:
    """Objective value at assignment x."""
    if len(x) != q.n:
        raise ValueError(f"assignment length {len(x)} != variable count {q.n}")
    total = q.offset
    for i, xi in enumerate(x):
        if xi:
            total += q.linear[i]
    for (i, j), coeff in q.quadratic.items():
        if x[i] and x[j]:
            total += coeff
    return total


def _energies_for_block(q: Qubo, indices: np.ndarray) -> np.ndarray:
    bits = ((indices[:, None] >> np.arange(q.n)) & 1).astype(np.float64)
    energies = bits @ np.asarray(q.linear) + q.offset
    for (i, j), coeff in q.quadratic.items():
        energies += coeff * bits[:, i] * bits[:, j]
    return energies


def solve_exhaustive(q: Qubo, cap: int = EXHAUSTIVE_CAP) -> tuple[np.ndarray, float]:
    """Global minimum by sweeping all 2^n assignments.

    Ties go to the assignment with the lowest binary value (variable i is
    bit i). Refuses instances above ``cap`` variables.
    """
    if q.n > cap:
        raise ValueError(
            f"{q.n} variables exceeds the exhaustive cap of {cap}; "
            "use solve_anneal for larger instances"
        )
    if q.n == 0:
        return np.zeros(0, dtype=np.uint8), float(q.offset)
    best_energy = np.inf
    best_index = 0
    block = 1 << 20
    for start in range(0, 1 << q.n, block):
        stop = min(start + block, 1 << q.n)
        indices = np.arange(start, stop, dtype=np.int64)
        energies = _energies_for_block(q, indices)
        k = int(np.argmin(energies))
        if energies[k] < best_energy:
            best_energy = float(energies[k])
            best_index = start + k
    assignment = ((best_index >> np.arange(q.n)) & 1).astype(np.uint8)
    return assignment, best_energy


def _neighbor_lists(q: Qubo) -> list[tuple[np.ndarray, np.ndarray]]:
    per_var: list[tuple[list[int], list[float]]] = [([], []) for _ in range(q.n)]
    for (i, j), coeff in q.quadratic.items():
        per_var[i][0].append(j)
        per_var[i][1].append(coeff)
        per_var[j][0].append(i)
        per_var[j][1].append(coeff)
    return [
        (np.asarray(idx, dtype=np.int64), np.asarray(co, dtype=np.float64))
        for idx, co in per_var
    ]


def solve_anneal(
    q: Qubo,
    reads: int = 100,
    sweeps: int = 100,
    seed: int = 0,
    t_start: float | None = None,
    t_end: float = 1e-3,
) -> tuple[np.ndarray, float]:
    """Simulated annealing over ``reads`` independent restarts.

    Each restart runs single-bit-flip Metropolis sweeps under a geometric
    temperature schedule. Heuristic: the result is always a feasible
    assignment but not necessarily the global minimum. Deterministic for a
    fixed seed.
    """
    if reads < 1 or sweeps < 1:
        raise ValueError("reads and sweeps must both be at least 1")
    if q.n == 0:
        return np.zeros(0, dtype=np.uint8), float(q.offset)
    rng = np.random.default_rng(seed)
    linear = np.asarray(q.linear)
    neighbors = _neighbor_lists(q)
    coeffs = [abs(c) for c in q.linear] + [abs(c) for c in q.quadratic.values()]
    if t_start is None:
        t_start = max(max(coeffs, default=1.0), 1e-3)

    x = rng.integers(0, 2, size=(reads, q.n)).astype(np.float64)
    energies = np.full(reads, q.offset) + x @ linear
    for (i, j), coeff in q.quadratic.items():
        energies += coeff * x[:, i] * x[:, j]
    best_energy = energies.copy()
    best_x = x.copy()

    if sweeps > 1:
        ratio = (t_end / t_start) ** (1.0 / (sweeps - 1))
    else:
        ratio = 1.0
    temperature = t_start
    for _ in range(sweeps):
        for v in range(q.n):
            idx, co = neighbors[v]
            local = linear[v] + (x[:, idx] @ co if idx.size else 0.0)
            delta = (1.0 - 2.0 * x[:, v]) * local
            accept = delta <= 0.0
            uphill = ~accept
            if uphill.any():
                p = np.exp(-np.minimum(delta[uphill] / temperature, 700.0))
                accept[uphill] = rng.random(int(uphill.sum())) < p
            x[accept, v] = 1.0 - x[accept, v]
            energies[accept] += delta[accept]
        improved = energies < best_energy
        best_energy[improved] = energies[improved]
        best_x[improved] = x[improved]
        temperature *= ratio

    minimum = float(best_energy.min())
    candidates = [
        best_x[k].astype(np.uint8)
        for k in range(reads)
        if best_energy[k] <= minimum + 1e-12
    ]

    def binary_value(a: np.ndarray) -> int:
        return sum(int(b) << i for i, b in enumerate(a))

    # deterministic tie-break: lowest binary value among the best reads
    assignment = min(candidates, key=binary_value)
    return assignment, evaluate(q, assignment)


def decode_cover(g: Graph, x: Sequence[int]) -> set[int]:
    """Set bits as a cover, repaired to validity and pruned of redundancy.

    Uncovered edges get their higher-degree endpoint added; afterwards any
    vertex whose neighbors are all in the set is dropped, scanning from the
    highest id down. The result is always a valid vertex cover.
    """
    if len(x) != g.n:
        raise ValueError(f"assignment length {len(x)} != vertex count {g.n}")
    cover = {v for v in g.vertices() if x[v]}
    for u, v in g.edges():
        if u not in cover and v not in cover:
            if g.degree(u) > g.degree(v):
                cover.add(u)
            elif g.degree(v) > g.degree(u):
                cover.add(v)
            else:
                cover.add(min(u, v))
    for v in sorted(cover, reverse=True):
        if g.neighbors(v) <= cover:
            cover.discard(v)
    return cover


def export_qubo(q: Qubo) -> str:
    """Sparse text form; ``parse_qubo`` restores it bit-exactly."""
    linear_terms = [(i, c) for i, c in enumerate(q.linear) if c != 0.0]
    quad_terms = sorted(q.quadratic.items())
    lines = [
        f"c offset {q.offset!r}",
        f"c A {q.penalty_a!r} B {q.size_b!r}",
        f"p qubo 0 {q.n} {len(linear_terms)} {len(quad_terms)}",
    ]
    lines.extend(f"{i} {i} {c!r}" for i, c in linear_terms)
    lines.extend(f"{i} {j} {c!r}" for (i, j), c in quad_terms)
    return "\n".join(lines) + "\n"


def parse_qubo(text: str) -> Qubo:
    """Parse the export_qubo text format."""
    offset = 0.0
    penalty_a = 2.0
    size_b = 1.0
    n = None
    linear: list[float] = []
    quadratic: dict[tuple[int, int], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "c":
            if len(fields) >= 3 and fields[1] == "offset":
                offset = float(fields[2])
            elif len(fields) >= 5 and fields[1] == "A" and fields[3] == "B":
                penalty_a = float(fields[2])
                size_b = float(fields[4])
            continue
        if fields[0] == "p":
            if len(fields) != 6 or fields[1] != "qubo":
                raise ValueError(f"line {lineno}: malformed qubo header {line!r}")
            n = int(fields[3])
            linear = [0.0] * n
            continue
        if n is None:
            raise ValueError(f"line {lineno}: term before qubo header")
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: malformed term {line!r}")
        i, j, coeff = int(fields[0]), int(fields[1]), float(fields[2])
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"line {lineno}: index out of range 0..{n - 1}")
        if i == j:
            linear[i] = coeff
        else:
            quadratic[(min(i, j), max(i, j))] = coeff
    if n is None:
        raise ValueError("missing qubo header line")
    return Qubo(
        n=n,
        linear=tuple(linear),
        quadratic=quadratic,
        offset=offset,
        penalty_a=penalty_a,
        size_b=size_b,
    )
