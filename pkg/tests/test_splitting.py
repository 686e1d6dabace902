import pytest

from vertexcover import (
    SelectionStrategy,
    Subproblem,
    brute_force_oracle,
    random_graph,
    select_vertex,
    split,
)

from conftest import complete_graph, empty_graph, path_graph, star_graph


def test_select_highest_degree_star():
    s = Subproblem.root(star_graph(4))
    assert select_vertex(s, SelectionStrategy("highest_degree", seed=1)) == 0


def test_select_all_ties_stable():
    s = Subproblem.root(complete_graph(5))
    for kind in ("lowest_degree", "highest_degree", "median_degree", "random"):
        strategy = SelectionStrategy(kind, seed=9)
        first = select_vertex(s, strategy)
        assert all(select_vertex(s, strategy) == first for _ in range(5))


def test_select_lowest_degree_path_tie():
    s = Subproblem.root(path_graph(3))
    for seed in range(6):
        v = select_vertex(s, SelectionStrategy("lowest_degree", seed=seed))
        assert v in (0, 2)
        assert select_vertex(s, SelectionStrategy("lowest_degree", seed=seed)) == v


def test_select_median_degree_path4():
    # degrees (1, 2, 2, 1): sorted order puts a degree-2 vertex at index 2
    s = Subproblem.root(path_graph(4))
    assert select_vertex(s, SelectionStrategy("median_degree", seed=0)) in (1, 2)


def test_select_seed_changes_tie_choice():
    s = Subproblem.root(complete_graph(30))
    picks = {select_vertex(s, SelectionStrategy("random", seed=seed))
             for seed in range(12)}
    assert len(picks) > 1


def test_select_empty_graph_errors():
    with pytest.raises(ValueError):
        select_vertex(Subproblem.root(empty_graph(0)), SelectionStrategy())


def test_unknown_strategy_kind():
    with pytest.raises(ValueError):
        SelectionStrategy("best_degree")


def test_split_triangle():
    s = Subproblem.root(complete_graph(3))
    s_plus, s_minus = split(s, 0)
    assert s_plus.graph.n == 2 and s_plus.graph.m == 1
    assert s_plus.committed == {0}
    assert s_minus.graph.n == 0
    assert s_minus.committed == {1, 2}
    assert s_plus.depth == s_minus.depth == 1


def test_split_star_center():
    star = star_graph(4)
    s_plus, s_minus = split(Subproblem.root(star), 0)
    assert s_plus.graph.n == 4 and s_plus.graph.m == 0
    assert s_plus.committed == {0}
    assert s_minus.graph.n == 0
    assert s_minus.committed == {1, 2, 3, 4}
    best = min(len(s_plus.committed) + brute_force_oracle(s_plus.graph),
               len(s_minus.committed) + brute_force_oracle(s_minus.graph))
    assert best == brute_force_oracle(star) == 1


def test_split_isolated_vertex():
    g = random_graph(5, 0.0, seed=0)
    s_plus, s_minus = split(Subproblem.root(g), 2)
    assert s_plus.committed == {2}
    assert s_minus.committed == set()
    assert s_plus.graph.n == s_minus.graph.n == 4


def test_split_missing_vertex():
    with pytest.raises(ValueError):
        split(Subproblem.root(path_graph(3)), 5)


def test_split_exhaustive_identity():
    # optimum equals the better of the two cases, for every split vertex
    for seed in range(12):
        g = random_graph(4 + seed % 9, 0.35, seed=seed)
        mvc = brute_force_oracle(g)
        s = Subproblem.root(g)
        for v in range(g.n):
            s_plus, s_minus = split(s, v)
            assert mvc == min(1 + brute_force_oracle(s_plus.graph),
                              g.degree(v) + brute_force_oracle(s_minus.graph))


def test_split_shrinks_both_children():
    for seed in range(6):
        g = random_graph(10, 0.4, seed=seed)
        s = Subproblem.root(g)
        for v in range(g.n):
            s_plus, s_minus = split(s, v)
            assert s_plus.graph.n == g.n - 1
            assert s_minus.graph.n == g.n - 1 - g.degree(v)


def test_split_bookkeeping_monotone_and_disjoint():
    g = random_graph(12, 0.3, seed=5)
    node = Subproblem.root(g)
    seen = set()
    while node.graph.n > 0:
        v = select_vertex(node, SelectionStrategy("highest_degree", seed=3))
        s_plus, s_minus = split(node, v)
        for child in (s_plus, s_minus):
            increment = child.committed - node.committed
            assert node.committed <= child.committed
            assert not (increment & seen)
        seen |= s_plus.committed - node.committed
        node = s_plus
    # committed vertices never reappear in the residual
    assert not (node.committed & node.original_ids())
