import pytest

from vertexcover import (
    BoundConfig,
    brute_force_oracle,
    combine_bounds,
    is_vertex_cover,
    lb_coloring,
    lb_matching_half,
    lb_min_degree,
    lb_spectral,
    random_graph,
    ub_greedy_clique,
)

from conftest import complete_graph, cycle_graph, empty_graph, path_graph, star_graph


def test_matching_half_examples():
    assert lb_matching_half(empty_graph(6)) == 0
    assert lb_matching_half(complete_graph(4)) == 2
    assert lb_matching_half(path_graph(3)) == 1


def test_min_degree_examples():
    for n in (2, 5, 9):
        assert lb_min_degree(complete_graph(n)) == n - 1
    assert lb_min_degree(star_graph(4)) == 1
    assert lb_min_degree(cycle_graph(5)) == 2
    assert lb_min_degree(empty_graph(3)) == 0


def test_spectral_examples():
    assert lb_spectral(empty_graph(7)) == 0
    assert lb_spectral(complete_graph(3)) == 2
    assert lb_spectral(cycle_graph(5)) == 3


def test_coloring_examples():
    for n in (3, 6):
        assert lb_coloring(complete_graph(n)) == n - 1
    assert lb_coloring(empty_graph(5)) == 0
    assert 2 <= lb_coloring(cycle_graph(5)) <= 3


def test_greedy_clique_examples():
    size, witness = ub_greedy_clique(empty_graph(4))
    assert size == 0 and witness == frozenset()
    size, witness = ub_greedy_clique(complete_graph(6))
    assert size == 5 and len(witness) == 5
    size, witness = ub_greedy_clique(path_graph(3))
    assert size == 1 and witness == frozenset({1})


def test_combine_bounds_c5():
    report = combine_bounds(cycle_graph(5), BoundConfig.all())
    assert report.lower == 3
    assert report.lower_parts["spectral"] == 3
    assert report.upper >= 3


def test_combine_bounds_incumbent_dominates():
    g = random_graph(8, 0.5, seed=0)
    cfg = BoundConfig(frozenset(), frozenset({"decomposition_incumbent"}))
    report = combine_bounds(g, cfg, incumbent=0)
    assert report.upper == 0
    assert report.witness_cover is None


def test_combine_bounds_edgeless():
    report = combine_bounds(empty_graph(4), BoundConfig.all())
    assert report.lower == 0
    assert report.upper == 0
    assert report.witness_cover == frozenset()


def test_combine_bounds_defaults_to_trivial():
    g = random_graph(9, 0.4, seed=2)
    report = combine_bounds(g, BoundConfig.none())
    assert report.lower == 0
    assert report.upper == g.n
    assert report.lower_parts == {} and report.upper_parts == {}


def test_bounds_safety_against_oracle(corpus_n16):
    for g, oracle in corpus_n16:
        for fn in (lb_matching_half, lb_min_degree, lb_spectral, lb_coloring):
            assert fn(g) <= oracle, fn.__name__
        size, witness = ub_greedy_clique(g)
        assert size >= oracle
        assert len(witness) == size
        assert is_vertex_cover(g, witness)


def test_lower_never_exceeds_upper_when_sound(corpus_n16):
    cfg = BoundConfig.all()
    for g, _ in corpus_n16:
        report = combine_bounds(g, cfg)
        assert report.lower <= report.upper


def test_reports_deterministic():
    g = random_graph(14, 0.5, seed=8)
    first = combine_bounds(g, BoundConfig.all(), incumbent=9)
    second = combine_bounds(g, BoundConfig.all(), incumbent=9)
    assert first == second


def test_complete_graph_bounds_tight():
    g = complete_graph(7)
    report = combine_bounds(g, BoundConfig.all())
    assert report.lower == report.upper == 6


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        BoundConfig(frozenset({"lovasz"}), frozenset())
    with pytest.raises(ValueError):
        BoundConfig(frozenset(), frozenset({"magic"}))


def test_registered_lower_bound_is_usable():
    from vertexcover import register_lower_bound

    register_lower_bound("half_vertices_demo", lambda g: 0 if g.m == 0 else 1)
    cfg = BoundConfig(frozenset({"half_vertices_demo", "coloring"}), frozenset())
    report = combine_bounds(complete_graph(4), cfg)
    assert report.lower_parts["half_vertices_demo"] == 1
    assert report.lower == 3
    with pytest.raises(ValueError):
        register_lower_bound("half_vertices_demo", lambda g: 0)
