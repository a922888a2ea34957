"""Weighted Hasse diagrams of cell complexes.

Two variants are built over an arbitrary face poset: the plain diagram has an
arc for every facet pair, while the modified diagram keeps only the arcs whose
upper cell is strictly smaller than the lower cell in a supplied total order
on cells.  Cells are referenced through opaque integer ids so the matching
engine stays generic; a side table maps ids back to cell descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .complexes import SimplicialComplex
from .matching import Matching, WeightedMatchGraph, match_graph
from .ordering import ValueSet

PLAIN = "plain"
MODIFIED = "modified"


@dataclass(frozen=True)
class HasseDiagram:
    variant: str
    nodes: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]  # (lower cell id, upper cell id)
    arc_weight: Mapping[tuple[int, int], object]
    cell_of: Mapping[int, object]
    id_of: Mapping[object, int]

    def down_arcs(self, node: int) -> list[tuple[int, int]]:
        return [a for a in self.arcs if a[1] == node]

    def up_arcs(self, node: int) -> list[tuple[int, int]]:
        return [a for a in self.arcs if a[0] == node]

    def to_match_graph(self) -> WeightedMatchGraph:
        weights = {(min(a), max(a)): w for a, w in self.arc_weight.items()}
        return match_graph(weights, extra_vertices=self.nodes)

    def arc_of_edge(self, e) -> tuple[int, int]:
        """Recover the (lower, upper) arc behind an undirected matching edge."""
        u, v = e
        return (u, v) if (u, v) in self.arc_weight else (v, u)


def build_hasse(delta: SimplicialComplex) -> HasseDiagram:
    """Plain Hasse diagram of a simplicial complex, arcs weighted by f(tau \\ sigma)."""
    cells = delta.sorted_simplices()
    id_of = {s: i for i, s in enumerate(cells)}
    arc_weight = {}
    for tau in cells:
        if len(tau) == 1:
            continue
        for sigma in delta.facets(tau):
            (removed,) = set(tau) - set(sigma)
            arc_weight[(id_of[sigma], id_of[tau])] = delta.valuation[removed]
    return HasseDiagram(PLAIN, tuple(range(len(cells))), tuple(sorted(arc_weight)),
                        arc_weight, dict(enumerate(cells)), id_of)


def build_modified_hasse(cells: Sequence, facets: Callable[[object], Iterable],
                         order_key: Callable[[object], object],
                         arc_weight: Callable[[object, object], object]) -> HasseDiagram:
    """Modified Hasse diagram over an arbitrary face poset.

    Keeps the facet arcs (sigma, tau) with key(tau) < key(sigma); each kept
    arc is weighted by ``arc_weight(sigma, tau)``, the order key of the
    complementary face.
    """
    cells = list(cells)
    id_of = {c: i for i, c in enumerate(cells)}
    keys = {c: order_key(c) for c in cells}
    weights = {}
    for tau in cells:
        for sigma in facets(tau):
            if keys[tau] < keys[sigma]:
                weights[(id_of[sigma], id_of[tau])] = arc_weight(sigma, tau)
    return HasseDiagram(MODIFIED, tuple(range(len(cells))), tuple(sorted(weights)),
                        weights, dict(enumerate(cells)), id_of)


def modified_hasse_for_complex(delta: SimplicialComplex) -> HasseDiagram:
    """Modified variant for simplicial input: cell order and weights by lex order."""
    return build_modified_hasse(
        delta.sorted_simplices(),
        delta.facets,
        delta.f_set,
        lambda sigma, tau: ValueSet(delta.valuation[v] for v in set(tau) - set(sigma)),
    )


def matched_arcs(diagram: HasseDiagram, matching: Matching) -> list[tuple[int, int]]:
    return sorted(diagram.arc_of_edge(e) for e in matching.matched)
