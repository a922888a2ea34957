"""Gradient fields, V-paths, halos, steepest descent."""

import graphlib

import pytest

from morsematch.complexes import build_complex, dim, faces
from morsematch.errors import CycleDetected
from morsematch.fileio import gradient_report
from morsematch.gradient import DiscreteGradientField, VPath, all_vpaths, compute_gradient, \
    gain_loss_sets, halo, is_gradient, steepest_descent_check, trace_vpath, vpath_tree
from morsematch.ordering import lex_compare, sort_key
from morsematch.randgen import generate_random_complex

PATH_COMPLEX = ([[0, 1], [1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})


def path_complex():
    return build_complex(*PATH_COMPLEX)


def rotating_field():
    """Hand-built cyclic matching on the boundary of a triangle."""
    d = build_complex([[0, 1], [1, 2], [0, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    return DiscreteGradientField(d, {(0,): (0, 1), (1,): (1, 2), (2,): (0, 2)})


def acyclic_oracle(field):
    """Independent acyclicity check through the standard library topo sort."""
    delta = field.complex
    digraph = {s: [] for s in delta.simplices}
    for sigma, tau in field.pairs.items():
        digraph[sigma].append(tau)
    for tau in delta.simplices:
        if len(tau) > 1:
            partner = field.partner_down.get(tau)
            digraph[tau].extend(r for r in delta.facets(tau) if r != partner)
    try:
        tuple(graphlib.TopologicalSorter(digraph).static_order())
        return True
    except graphlib.CycleError:
        return False


def enumerate_paths_oracle(field, start):
    """Plain recursive V-path enumeration, maximal continuations only."""
    delta = field.complex
    out = []

    def go(seq):
        tau = field.pairs.get(seq[-1])
        if tau is None:
            out.append(tuple(seq))
            return
        for rho in sorted(delta.facets(tau)):
            if rho != seq[-1]:
                go(seq + [tau, rho])

    go([start])
    return out


def test_path_complex_gradient():
    g = compute_gradient(path_complex())
    assert g.pairs == {(1,): (0, 1), (2,): (1, 2)}
    assert g.critical == {(0,)}


def test_single_vertex_gradient():
    d = build_complex([[0]], {0: 5.0})
    g = compute_gradient(d)
    assert not g.pairs and g.critical == {(0,)}


def test_single_edge_gradient():
    d = build_complex([[0, 1]], {0: 1.0, 1: 2.0})
    g = compute_gradient(d)
    assert g.pairs == {(1,): (0, 1)}
    assert g.critical == {(0,)}


@pytest.mark.parametrize("seed", range(25))
def test_greedy_fields_are_gradients(seed):
    d = generate_random_complex(seed, max_vertices=10, max_dim=4)
    g = compute_gradient(d)
    assert is_gradient(g)
    assert acyclic_oracle(g)


def test_rotating_matching_is_not_gradient():
    g = rotating_field()
    assert not is_gradient(g)
    assert not acyclic_oracle(g)


def test_empty_matching_is_gradient():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    g = DiscreteGradientField(d, {})
    assert is_gradient(g)
    assert g.critical == d.simplices


def test_halo_of_edge():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    h = halo(d, (1, 2))
    assert h.members == {0, 1, 2}
    assert h.argmin == 0


def test_halo_of_vertex_local_minimum():
    d = build_complex([[0, 1, 2]], {0: 1.0, 1: 2.0, 2: 3.0})
    h = halo(d, (0,))
    assert h.members == {0, 1, 2}
    assert h.argmin == 0


def test_halo_isolated_vertex():
    d = build_complex([[0]], {0: 5.0})
    h = halo(d, (0,))
    assert h.members == {0} and h.argmin == 0


def test_trace_vpath_path_complex():
    g = compute_gradient(path_complex())
    assert trace_vpath(g, (2,)).cells == ((2,), (1, 2), (1,), (0, 1), (0,))


def test_trace_vpath_trivial_at_critical():
    g = compute_gradient(path_complex())
    path = trace_vpath(g, (0,))
    assert path.cells == ((0,),)
    assert path.is_trivial()


def test_trace_vpath_cycle_detected():
    with pytest.raises(CycleDetected):
        trace_vpath(rotating_field(), (0,))
    with pytest.raises(CycleDetected):
        vpath_tree(rotating_field(), (0,))


def test_gain_loss_two_step_path():
    path = VPath(((2,), (1, 2), (1,), (0, 1), (0,)))
    gained, lost = gain_loss_sets(path)
    assert gained == {0, 1}
    assert lost == {1, 2}


def test_gain_loss_trivial():
    assert gain_loss_sets(VPath(((0,),))) == (frozenset(), frozenset())


def test_gain_loss_closed_path_equal():
    closed = VPath(((0,), (0, 1), (1,), (1, 2), (2,), (0, 2), (0,)))
    gained, lost = gain_loss_sets(closed)
    assert gained == lost == {0, 1, 2}


@pytest.mark.parametrize("seed", range(20))
def test_gain_loss_lemmas_random(seed):
    d = generate_random_complex(seed, max_vertices=9, max_dim=3)
    g = compute_gradient(d)
    for path in all_vpaths(g):
        if path.is_trivial():
            continue
        first, last = set(path.cells[0]), set(path.cells[-1])
        gained, lost = gain_loss_sets(path)
        assert gained - lost <= last - first
        assert lost - gained <= first - last
        assert first - last <= lost
        assert last - first <= gained


def test_steepest_descent_path_complex():
    d = path_complex()
    assert steepest_descent_check(d, compute_gradient(d)) == []
    assert halo(d, (0,)).argmin == 0  # the critical vertex contains its argmin


def test_steepest_descent_single_vertex():
    d = build_complex([[0]], {0: 5.0})
    assert steepest_descent_check(d, compute_gradient(d)) == []


@pytest.mark.parametrize("seed", range(40))
def test_steepest_descent_random(seed):
    d = generate_random_complex(seed, max_vertices=10, max_dim=3)
    assert steepest_descent_check(d, compute_gradient(d)) == []


@pytest.mark.parametrize("seed", range(15))
def test_decreasing_flow_random(seed):
    d = generate_random_complex(seed, max_vertices=9, max_dim=3)
    g = compute_gradient(d)
    for start in d.sorted_simplices():
        for cells in enumerate_paths_oracle(g, start):
            if len(cells) == 1 or not g.is_critical(cells[-1]):
                continue
            last = d.f_set(cells[-1])
            for sigma in cells[:-2:2]:
                assert lex_compare(last, d.f_set(sigma)) < 0


@pytest.mark.parametrize("seed", range(15))
def test_vpath_tree_matches_oracle(seed):
    d = generate_random_complex(seed, max_vertices=9, max_dim=3)
    g = compute_gradient(d)
    for start in d.sorted_simplices():
        ours = sorted(p.cells for p in vpath_tree(g, start))
        assert ours == sorted(enumerate_paths_oracle(g, start))


@pytest.mark.parametrize("seed", range(20))
def test_halo_monotone_under_inclusion(seed):
    d = generate_random_complex(seed, max_vertices=9, max_dim=3)
    for tau in d.sorted_simplices():
        h_tau = halo(d, tau)
        for sigma in faces(tau):
            h_sigma = halo(d, sigma)
            assert h_tau.members <= h_sigma.members
            assert sort_key(d.valuation[h_sigma.argmin]) <= sort_key(d.valuation[h_tau.argmin])


@pytest.mark.parametrize("seed", range(20))
def test_critical_euler_count(seed):
    d = generate_random_complex(seed, max_vertices=10, max_dim=3)
    g = compute_gradient(d)
    alternating = sum(-1 if dim(s) % 2 else 1 for s in g.critical)
    assert alternating == d.euler_characteristic()


def test_gradient_report_shape():
    g = compute_gradient(path_complex())
    report = gradient_report(g, [trace_vpath(g, (2,))])
    assert report["pairs"] == [[[1], [0, 1]], [[2], [1, 2]]]
    assert report["critical"] == [[0]]
    assert report["vpaths"] == [[[2], [1, 2], [1], [0, 1], [0]]]


def test_sorted_critical_order():
    d = generate_random_complex(5, max_vertices=10, max_dim=3)
    g = compute_gradient(d)
    crits = g.sorted_critical()
    keys = [(dim(s), sort_key(d.f_set(s))) for s in crits]
    assert keys == sorted(keys)
