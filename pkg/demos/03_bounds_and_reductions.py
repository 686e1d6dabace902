#!/usr/bin/env python3
"""Pruning machinery: cover-size bounds and graph reductions.

Bounds sandwich the unknown optimum from both sides; reductions commit
forced vertices and shrink the instance without losing optimality.
"""

from vertexcover import (
    BoundConfig,
    Subproblem,
    brute_force_oracle,
    build_graph,
    combine_bounds,
    lb_coloring,
    lb_matching_half,
    lb_min_degree,
    lb_spectral,
    random_graph,
    reduce_chain,
    ub_greedy_clique,
)

print("=== bounds on random instances ===")
header = f"{'n':>3} {'opt':>4} {'match':>6} {'spect':>6} {'mindeg':>7} {'color':>6} {'clique ub':>9}"
print(header)
for seed in range(6):
    g = random_graph(16, 0.2 + 0.12 * seed, seed=seed)
    opt = brute_force_oracle(g)
    ub, witness = ub_greedy_clique(g)
    print(f"{g.n:>3} {opt:>4} {lb_matching_half(g):>6} {lb_spectral(g):>6} "
          f"{lb_min_degree(g):>7} {lb_coloring(g):>6} {ub:>9}")

g = random_graph(16, 0.5, seed=11)
report = combine_bounds(g, BoundConfig.all())
print("\ncombined report:", report.lower, "<= optimum <=", report.upper)
print("per-method:", report.lower_parts, report.upper_parts)

print("\n=== reductions ===")
# A caterpillar: path spine with pendant legs. Pendant and isolated rules
# dissolve it completely without any branching.
spine = [(i, i + 1) for i in range(4)]
legs = [(i, 5 + i) for i in range(5)]
caterpillar = build_graph(10, spine + legs)
out = reduce_chain(Subproblem.root(caterpillar), ["neighbor"])
print("caterpillar: committed", sorted(out.reduced.committed),
      "residual size", out.reduced.graph.n,
      "| optimum", brute_force_oracle(caterpillar))

# Dominance handles dense local structure the neighbor rule cannot.
wheel = build_graph(6, [(0, i) for i in range(1, 6)]
                    + [(i, i % 5 + 1) for i in range(1, 6)])
out = reduce_chain(Subproblem.root(wheel), ["dominance", "neighbor"])
print("wheel:       committed", sorted(out.reduced.committed),
      "residual size", out.reduced.graph.n,
      "| optimum", brute_force_oracle(wheel))

# On sparse random graphs, reductions often do a large share of the work.
for seed in (0, 1, 2):
    g = random_graph(40, 0.06, seed=seed)
    out = reduce_chain(Subproblem.root(g), ["neighbor", "dominance"])
    print(f"G(40, 0.06) seed {seed}: removed {out.removed_vertices:>2} of 40 "
          f"vertices, committed {out.cover_contribution}")
