"""Complex construction, navigation, subdivision, and file formats."""

from itertools import chain, combinations

import pytest

from morsematch.complexes import barycentric_subdivide, build_complex, dim, simplex
from morsematch.errors import DuplicateValue, EmptySimplex, InvalidInput, NotInComplex, \
    UnknownVertex
from morsematch.fileio import complex_from_dict, complex_to_dict, load_off
from morsematch.ordering import ValueSet
from morsematch.randgen import generate_random_complex


def brute_closure(maximal):
    """Oracle: all non-empty subsets of the given vertex lists."""
    out = set()
    for top in maximal:
        vs = sorted(set(top))
        for r in range(1, len(vs) + 1):
            out.update(combinations(vs, r))
    return out


def test_triangle_closure():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    assert len(d) == 7
    assert d.simplices == frozenset(brute_closure([[0, 1, 2]]))


def test_single_vertex():
    d = build_complex([[0]], {0: 5.0})
    assert d.simplices == {(0,)}
    assert d.dim == 0


def test_duplicate_value_rejected():
    with pytest.raises(DuplicateValue):
        build_complex([[0, 1], [1, 2]], {0: 1.0, 1: 1.0, 2: 2.0})


def test_empty_simplex_rejected():
    with pytest.raises(EmptySimplex):
        build_complex([[]], {})
    with pytest.raises(EmptySimplex):
        simplex([])


def test_unknown_vertex_rejected():
    with pytest.raises(UnknownVertex):
        build_complex([[0, 1]], {0: 1.0})


def test_facets_and_cofacets_triangle():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    facets, cofacets = d.facets_and_cofacets((0, 1))
    assert facets == {(0,), (1,)}
    assert cofacets == {(0, 1, 2)}


def test_facets_and_cofacets_isolated_vertex():
    d = build_complex([[0]], {0: 5.0})
    assert d.facets_and_cofacets((0,)) == (set(), set())


def test_cofacets_shared_edge():
    d = build_complex([[0, 1, 2], [1, 2, 3]], {0: 1.0, 1: 2.0, 2: 3.0, 3: 4.0})
    # oracle: supersets of {1,2} in the closure with one extra vertex
    expected = {s for s in brute_closure([[0, 1, 2], [1, 2, 3]])
                if set(s) > {1, 2} and len(s) == 3}
    assert d.cofacets((1, 2)) == expected == {(0, 1, 2), (1, 2, 3)}


def test_not_in_complex():
    d = build_complex([[0, 1]], {0: 1.0, 1: 2.0})
    with pytest.raises(NotInComplex):
        d.facets((0, 2))


def test_closure_idempotent():
    d = build_complex([[0, 1, 2], [2, 3]], {0: 1.0, 1: 2.0, 2: 3.0, 3: 4.0})
    again = build_complex([list(s) for s in d.simplices], d.valuation)
    assert again.simplices == d.simplices
    assert again.valuation == d.valuation


def count_chains(poset):
    """Oracle: chains of every length in a face poset, by brute force."""
    cells = sorted(poset, key=lambda s: (len(s), s))
    chains = {0: 0}
    counts = {}

    def extend(prefix_last, length):
        counts[length] = counts.get(length, 0) + 1
        for nxt in cells:
            if len(nxt) > len(prefix_last) and set(prefix_last) < set(nxt):
                extend(nxt, length + 1)

    for c in cells:
        extend(c, 1)
    return counts


def test_subdivide_triangle_counts():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    sub = barycentric_subdivide(d)
    oracle = count_chains(d.simplices)
    assert len(sub.simplices_of_dim(0)) == oracle[1] == 7
    assert len(sub.simplices_of_dim(1)) == oracle[2] == 12
    assert len(sub.simplices_of_dim(2)) == oracle[3] == 6


def test_subdivide_single_vertex():
    d = build_complex([[0]], {0: 5.0})
    sub = barycentric_subdivide(d)
    assert len(sub) == 1
    assert sub.valuation[0] == ValueSet([5.0])


def test_subdivide_single_edge():
    d = build_complex([[0, 1]], {0: 1.0, 1: 2.0})
    sub = barycentric_subdivide(d)
    assert len(sub.simplices_of_dim(0)) == 3
    assert len(sub.simplices_of_dim(1)) == 2


@pytest.mark.parametrize("seed", range(12))
def test_subdivision_invariants_random(seed):
    d = generate_random_complex(seed, max_vertices=7, max_dim=2)
    sub = barycentric_subdivide(d)
    assert len(sub.simplices_of_dim(0)) == len(d)
    assert sub.euler_characteristic() == d.euler_characteristic()
    values = list(sub.valuation.values())
    assert len(set(values)) == len(values)  # injective after subdivision
    assert sub.dim == d.dim


def test_subdivision_side_table():
    d = build_complex([[0, 1]], {0: 1.0, 1: 2.0})
    sub = barycentric_subdivide(d)
    assert set(sub.barycenter_of.values()) == d.simplices
    for b, s in sub.barycenter_of.items():
        assert sub.valuation[b] == d.f_set(s)


def test_iterated_subdivision():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    twice = barycentric_subdivide(barycentric_subdivide(d))
    assert len(twice.simplices_of_dim(0)) == 25  # 7 + 12 + 6 cells of the first
    assert twice.euler_characteristic() == 1


def test_complex_json_round_trip():
    d = build_complex([[0, 1, 2], [2, 3]], {0: 1.5, 1: 2.0, 2: 3.0, 3: 4.0})
    back = complex_from_dict(complex_to_dict(d))
    assert back.simplices == d.simplices
    assert back.valuation == d.valuation


def test_complex_json_nested_values_round_trip():
    sub = barycentric_subdivide(build_complex([[0, 1]], {0: 1.0, 1: 2.0}))
    back = complex_from_dict(complex_to_dict(sub))
    assert back.simplices == sub.simplices
    assert back.valuation == sub.valuation


def test_complex_json_rejects_garbage():
    with pytest.raises(InvalidInput):
        complex_from_dict({"vertices": [{"id": 0, "f": "high"}], "simplices": [[0]]})
    with pytest.raises(InvalidInput):
        complex_from_dict({"simplices": [[0]]})


OFF_TEXT = """OFF
4 2 5
0.0 0.0 0.0
1.0 0.0 0.0
0.0 1.0 0.0
1.0 1.0 0.0
3 0 1 2
3 1 2 3
"""


def test_off_loader():
    d = load_off(OFF_TEXT, [1.0, 3.0, 4.0, 2.0])
    assert (0, 1, 2) in d.simplices and (1, 2, 3) in d.simplices
    assert d.valuation[3] == 2.0
    assert len(d.simplices_of_dim(1)) == 5


def test_off_loader_value_count_mismatch():
    with pytest.raises(InvalidInput):
        load_off(OFF_TEXT, [1.0, 2.0])


def test_dim_helper():
    assert dim((0, 4, 9)) == 2
