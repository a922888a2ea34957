"""Greedy matcher, saturation, threshold subgraphs, alternating paths."""

import pytest

from morsematch.errors import AdjacentTie, BudgetExceeded
from morsematch.matching import enumerate_maximal_alternating_paths, greedy_match, \
    match_graph, threshold_subgraph
from morsematch.ordering import INFINITY
from morsematch.randgen import random_weighted_graph


def brute_greedy_oracle(edges):
    """Direct transcription of the matcher loop: repeatedly scan the remaining
    edges for the global minimum batch, match it, delete endpoints."""
    remaining = dict(edges)
    matched = set()
    while remaining:
        low = min(remaining.values())
        batch = [e for e, w in remaining.items() if w == low]
        matched.update(batch)
        gone = {v for e in batch for v in e}
        remaining = {e: w for e, w in remaining.items()
                     if e[0] not in gone and e[1] not in gone}
    return matched


def test_greedy_path_increasing_weights():
    g = match_graph({(1, 2): 1.0, (2, 3): 2.0, (3, 4): 3.0})
    m = greedy_match(g)
    assert m.matched == {(1, 2), (3, 4)}


def test_greedy_path_middle_minimum():
    g = match_graph({(1, 2): 2.0, (2, 3): 1.0, (3, 4): 3.0})
    m = greedy_match(g)
    assert m.matched == {(2, 3)}


def test_greedy_single_edge():
    g = match_graph({(0, 1): 42.0})
    assert greedy_match(g).matched == {(0, 1)}


def test_saturation_function():
    g = match_graph({(1, 2): 1.0, (2, 3): 2.0, (3, 4): 3.0})
    m = greedy_match(g)
    assert m.saturation == {1: 1.0, 2: 1.0, 3: 3.0, 4: 3.0}
    g2 = match_graph({(1, 2): 2.0, (2, 3): 1.0, (3, 4): 3.0})
    m2 = greedy_match(g2)
    assert m2.saturation[1] is INFINITY and m2.saturation[4] is INFINITY


def test_adjacent_tie_rejected():
    with pytest.raises(AdjacentTie):
        match_graph({(0, 1): 1.0, (1, 2): 1.0})


def test_disjoint_ties_matched_together():
    g = match_graph({(0, 1): 1.0, (2, 3): 1.0, (1, 2): 5.0})
    assert greedy_match(g).matched == {(0, 1), (2, 3)}


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        match_graph({(1, 1): 1.0})


@pytest.mark.parametrize("seed", range(30))
def test_greedy_agrees_with_brute_oracle(seed):
    g = random_weighted_graph(seed, max_vertices=10)
    m = greedy_match(g)
    assert m.matched == brute_greedy_oracle(dict(g.weight))


@pytest.mark.parametrize("seed", range(30))
def test_matching_validity(seed):
    g = random_weighted_graph(seed, max_vertices=12)
    m = greedy_match(g)
    saturated = [v for e in m.matched for v in e]
    assert len(saturated) == len(set(saturated))


def test_determinism():
    g1 = random_weighted_graph(99, max_vertices=12)
    g2 = random_weighted_graph(99, max_vertices=12)
    assert greedy_match(g1).matched == greedy_match(g2).matched


def test_threshold_subgraph_path():
    g = match_graph({(1, 2): 1.0, (2, 3): 2.0, (3, 4): 3.0})
    m = greedy_match(g)
    sub = threshold_subgraph(g, m, 3.0)
    assert sub.vertices == {3, 4}
    assert sub.edges == {(3, 4)}


def test_threshold_subgraph_minimal_threshold():
    g = match_graph({(1, 2): 1.0, (2, 3): 2.0, (3, 4): 3.0})
    m = greedy_match(g)
    sub = threshold_subgraph(g, m, 0.0)
    assert sub.vertices == g.vertices and sub.edges == g.edges


def test_threshold_subgraph_infinity():
    g = match_graph({(1, 2): 2.0, (2, 3): 1.0, (3, 4): 3.0})
    m = greedy_match(g)
    sub = threshold_subgraph(g, m, INFINITY)
    assert sub.vertices == {1, 4}
    assert not sub.edges


def test_single_matched_edge_is_maximal_path():
    g = match_graph({(0, 1): 1.0})
    m = greedy_match(g)
    paths = enumerate_maximal_alternating_paths(g, m, max_len=3)
    assert [p.edges for p in paths] == [((0, 1),)]


def test_three_edge_alternating_path():
    # 0-1 and 2-3 matched; middle edge 1-2 unmatched; the full path is maximal
    g = match_graph({(0, 1): 1.0, (1, 2): 5.0, (2, 3): 2.0})
    m = greedy_match(g)
    assert m.matched == {(0, 1), (2, 3)}
    paths = enumerate_maximal_alternating_paths(g, m, max_len=3)
    assert ((0, 1), (1, 2), (2, 3)) in [p.edges for p in paths]
    full = next(p for p in paths if len(p.edges) == 3)
    assert full.min_edges(g.weight) == ((0, 1),)
    assert full.matched_flags == (True, False, True)


def test_unmatched_edge_between_unsaturated_vertices_never_survives():
    # a length-1 alternating path on two unsaturated vertices cannot occur
    # after a greedy run
    for seed in range(40):
        g = random_weighted_graph(seed, max_vertices=9)
        m = greedy_match(g)
        for e in g.edges:
            if e not in m.matched:
                assert not (m.saturation[e[0]] is INFINITY
                            and m.saturation[e[1]] is INFINITY)


@pytest.mark.parametrize("seed", range(25))
def test_maximal_path_min_edges_matched(seed):
    g = random_weighted_graph(seed, max_vertices=9)
    m = greedy_match(g)
    paths = enumerate_maximal_alternating_paths(g, m, max_len=len(g.edges))
    assert paths, "expected at least one maximal alternating path"
    for p in paths:
        for e in p.min_edges(g.weight):
            assert e in m.matched
            # every path vertex is saturated at or above the path minimum
            for v in p.path_vertices:
                sat = m.saturation[v]
                assert sat is INFINITY or sat >= g.weight[e]


@pytest.mark.parametrize("seed", range(25))
def test_threshold_matched_lemma(seed):
    g = random_weighted_graph(seed, max_vertices=10)
    m = greedy_match(g)
    for e in g.edges:
        sub = threshold_subgraph(g, m, g.weight[e])
        if e in sub.edges:
            assert e in m.matched


def test_alternating_path_budget():
    g = random_weighted_graph(3, max_vertices=12, edge_probability=0.9)
    m = greedy_match(g)
    with pytest.raises(BudgetExceeded):
        enumerate_maximal_alternating_paths(g, m, max_len=len(g.edges), budget=50)
