"""Greedy matching on weighted undirected graphs.

The matcher repeatedly takes every remaining edge of globally minimum weight,
adds the whole batch to the matching, and deletes the batch's endpoints
together with their incident edges.  The output is a matching provided no two
edges sharing a vertex carry equal weight; that condition is validated, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Iterable, Mapping

from .errors import AdjacentTie, BudgetExceeded
from .ordering import INFINITY, compare_values, saturation_at_least

Edge = tuple  # canonical (u, v) with u < v


def edge(u, v) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedMatchGraph:
    vertices: frozenset
    edges: frozenset
    weight: Mapping[Edge, object]

    def incident(self, v) -> list[Edge]:
        return [e for e in self.edges if v in e]


def match_graph(weighted_edges: Mapping[Edge, object] | Iterable[tuple[Edge, object]],
                extra_vertices: Iterable = ()) -> WeightedMatchGraph:
    """Build a graph from an edge -> weight mapping and check tie-freedom."""
    items = dict(weighted_edges)
    weights = {edge(u, v): w for (u, v), w in items.items()}
    vertices = {v for e in weights for v in e}
    vertices.update(extra_vertices)
    _ensure_adjacent_tie_free(weights)
    return WeightedMatchGraph(frozenset(vertices), frozenset(weights), weights)


def _ensure_adjacent_tie_free(weights: Mapping[Edge, object]):
    incident: dict[object, list[Edge]] = {}
    for e in weights:
        for v in e:
            incident.setdefault(v, []).append(e)
    for v, es in incident.items():
        es = sorted(es, key=lambda e: _weight_key(weights[e]))
        for a, b in zip(es, es[1:]):
            if compare_values(weights[a], weights[b]) == 0:
                raise AdjacentTie(f"edges {a} and {b} at vertex {v!r} have equal weight")


def _weight_key(w):
    return cmp_to_key(compare_values)(w)


@dataclass(frozen=True)
class Matching:
    """Matched edge set plus the saturation function of the underlying graph."""

    matched: frozenset
    saturation: dict = field(compare=False)

    def is_matched(self, e: Edge) -> bool:
        return e in self.matched

    def partner(self, v):
        for e in self.matched:
            if v in e:
                return e[0] if e[1] == v else e[1]
        return None


def greedy_match(graph: WeightedMatchGraph) -> Matching:
    """Run the greedy matcher; deterministic for a given graph.

    Removing endpoints never lowers the weight of the remaining minimum, so a
    single ascending sweep over the edges, batched by equal weight, reproduces
    the iterative argmin-and-delete loop exactly.
    """
    order = sorted(graph.edges, key=lambda e: (_weight_key(graph.weight[e]), e))
    removed: set = set()
    matched: list[Edge] = []
    saturation: dict = {v: INFINITY for v in graph.vertices}
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and compare_values(graph.weight[order[j]], graph.weight[order[i]]) == 0:
            j += 1
        batch = [e for e in order[i:j] if e[0] not in removed and e[1] not in removed]
        taken: set = set()
        for e in batch:
            if e[0] in taken or e[1] in taken:
                raise AdjacentTie(f"equal minimum-weight edges collide at {e}")
            taken.update(e)
        for e in batch:
            matched.append(e)
            saturation[e[0]] = graph.weight[e]
            saturation[e[1]] = graph.weight[e]
        removed.update(taken)
        i = j
    return Matching(frozenset(matched), saturation)


def threshold_subgraph(graph: WeightedMatchGraph, matching: Matching, a) -> WeightedMatchGraph:
    """Induced subgraph on the vertices whose saturation is at least ``a``."""
    keep = {v for v in graph.vertices if saturation_at_least(matching.saturation[v], a)}
    weights = {e: w for e, w in graph.weight.items() if e[0] in keep and e[1] in keep}
    return WeightedMatchGraph(frozenset(keep), frozenset(weights), weights)


@dataclass(frozen=True)
class AlternatingPath:
    """Edge sequence alternating between matched and unmatched edges."""

    path_vertices: tuple
    edges: tuple
    matched_flags: tuple

    def __len__(self):
        return len(self.edges)

    def min_edges(self, weight: Mapping[Edge, object]) -> tuple:
        """E_min of the path: its edges of minimum weight."""
        best = None
        for e in self.edges:
            if best is None or compare_values(weight[e], weight[best]) < 0:
                best = e
        return tuple(e for e in self.edges if compare_values(weight[e], weight[best]) == 0)


def enumerate_maximal_alternating_paths(graph: WeightedMatchGraph, matching: Matching,
                                        max_len: int, budget: int = 500_000) -> list[AlternatingPath]:
    """All maximal alternating paths with up to ``max_len`` edges.

    Maximality is the saturation condition: every vertex of the path is either
    unsaturated or saturated by an edge of the path itself.  Exponential
    search; intended for small oracle graphs.
    """
    adjacency: dict[object, list[Edge]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        adjacency[e[0]].append(e)
        adjacency[e[1]].append(e)
    for v in adjacency:
        adjacency[v].sort()

    match_edge = {}
    for e in matching.matched:
        match_edge[e[0]] = e
        match_edge[e[1]] = e

    results: list[AlternatingPath] = []
    steps = 0

    def maximal(vertices, edges_on_path):
        return all(v not in match_edge or match_edge[v] in edges_on_path for v in vertices)

    def extend(vertices, edges_seq, edge_set):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"alternating-path search exceeded {budget} steps")
        if edges_seq and vertices[0] <= vertices[-1] and maximal(vertices, edge_set):
            results.append(AlternatingPath(
                tuple(vertices), tuple(edges_seq),
                tuple(e in matching.matched for e in edges_seq)))
        if len(edges_seq) == max_len:
            return
        tail = vertices[-1]
        last_matched = edges_seq[-1] in matching.matched
        for e in adjacency[tail]:
            if e in edge_set or (e in matching.matched) == last_matched:
                continue
            nxt = e[0] if e[1] == tail else e[1]
            if nxt in vertices:
                continue
            vertices.append(nxt)
            edges_seq.append(e)
            edge_set.add(e)
            extend(vertices, edges_seq, edge_set)
            edge_set.discard(e)
            edges_seq.pop()
            vertices.pop()

    for start in sorted(graph.vertices):
        for e in adjacency[start]:
            other = e[0] if e[1] == start else e[1]
            extend([start, other], [e], {e})
    return results
