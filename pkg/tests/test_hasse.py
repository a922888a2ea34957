"""Plain and modified Hasse diagrams."""

import pytest

from morsematch.complexes import build_complex, dim
from morsematch.dot import hasse_dot
from morsematch.gradient import compute_gradient
from morsematch.hasse import build_hasse, modified_hasse_for_complex
from morsematch.ordering import ValueSet, lex_compare
from morsematch.randgen import generate_random_complex


def arcs_by_cell(diagram):
    return {(diagram.cell_of[lo], diagram.cell_of[hi]): w
            for (lo, hi), w in diagram.arc_weight.items()}


def test_path_complex_arc_weights():
    d = build_complex([[0, 1], [1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    arcs = arcs_by_cell(build_hasse(d))
    assert arcs == {
        ((0,), (0, 1)): 2.0,
        ((1,), (0, 1)): 1.0,
        ((1,), (1, 2)): 3.0,
        ((2,), (1, 2)): 2.0,
    }


def test_single_vertex_diagram():
    d = build_complex([[0]], {0: 5.0})
    h = build_hasse(d)
    assert len(h.nodes) == 1 and not h.arcs


def test_triangle_counts():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    h = build_hasse(d)
    assert len(h.nodes) == 7
    assert len(h.arcs) == 9  # 6 vertex-edge + 3 edge-triangle


@pytest.mark.parametrize("seed", range(10))
def test_down_arc_count_matches_dimension(seed):
    d = generate_random_complex(seed, max_vertices=8, max_dim=3)
    h = build_hasse(d)
    down = {}
    for lo, hi in h.arcs:
        down[hi] = down.get(hi, 0) + 1
    for node in h.nodes:
        cell = h.cell_of[node]
        if dim(cell) > 0:
            assert down[node] == dim(cell) + 1


@pytest.mark.parametrize("seed", range(10))
def test_adjacent_arcs_distinct_weights(seed):
    d = generate_random_complex(seed, max_vertices=8, max_dim=3)
    # match_graph construction re-validates adjacent-tie-freedom
    build_hasse(d).to_match_graph()


def test_modified_triangle_arcs():
    # a, b, c = 0, 1, 2 with f(a) > f(b) > f(c)
    d = build_complex([[0, 1, 2]], {0: 3.0, 1: 2.0, 2: 1.0})
    h = modified_hasse_for_complex(d)
    arcs = set(arcs_by_cell(h))
    assert arcs == {
        ((0,), (0, 1)),
        ((0,), (0, 2)),
        ((0, 1), (0, 1, 2)),
        ((1,), (1, 2)),
    }
    # the face ordering makes f(abc) > f(ac), so the (ac, abc) arc is absent
    assert ((0, 2), (0, 1, 2)) not in arcs


def test_modified_arc_requires_smaller_cofacet():
    d = build_complex([[0, 1, 2]], {0: 3.0, 1: 2.0, 2: 1.0})
    h = modified_hasse_for_complex(d)
    for (lo, hi) in h.arcs:
        sigma, tau = h.cell_of[lo], h.cell_of[hi]
        assert lex_compare(d.f_set(tau), d.f_set(sigma)) < 0


def test_modified_is_subgraph_of_plain():
    for seed in range(8):
        d = generate_random_complex(seed, max_vertices=8, max_dim=3)
        plain = set(arcs_by_cell(build_hasse(d)))
        modified = set(arcs_by_cell(modified_hasse_for_complex(d)))
        assert modified <= plain


def test_modified_weights_are_value_sets():
    d = build_complex([[0, 1]], {0: 1.0, 1: 2.0})
    h = modified_hasse_for_complex(d)
    ((arc, weight),) = arcs_by_cell(h).items()
    assert arc == ((1,), (0, 1))
    assert weight == ValueSet([1.0])


def test_dot_export_marks_matching():
    d = build_complex([[0, 1], [1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    field = compute_gradient(d)
    h = build_hasse(d)
    text = hasse_dot(h, matched=set(field.pairs.items()), critical=set(field.critical))
    assert text.startswith("digraph")
    assert "style=bold" in text and "doublecircle" in text
    assert text.count("->") == len(h.arcs)
