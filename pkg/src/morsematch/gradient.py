"""Discrete gradient fields from greedy matchings on Hasse diagrams.

A field pairs each matched lower cell with its upper partner; unmatched cells
are critical.  V-paths walk matched arcs up and facet arcs down, never
revisiting the facet they came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .complexes import SimplicialComplex, Simplex, dim
from .errors import BudgetExceeded, CycleDetected, NotInComplex
from .hasse import HasseDiagram, build_hasse, modified_hasse_for_complex
from .matching import greedy_match
from .ordering import sort_key


class DiscreteGradientField:
    """Matching read as cell pairs sigma -> tau, plus the critical cell set."""

    def __init__(self, complex_: SimplicialComplex, pairs: dict, variant: str = "plain"):
        self.complex = complex_
        self.pairs = dict(pairs)
        self.variant = variant
        self.partner_down = {tau: sigma for sigma, tau in self.pairs.items()}
        paired = set(self.pairs) | set(self.partner_down)
        self.critical = frozenset(s for s in complex_.simplices if s not in paired)

    def is_critical(self, sigma: Simplex) -> bool:
        return sigma not in self.pairs and sigma not in self.partner_down

    def sorted_critical(self) -> list[Simplex]:
        return sorted(self.critical,
                      key=lambda s: (dim(s), sort_key(self.complex.f_set(s))))

    def critical_by_dim(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.critical:
            counts[dim(s)] = counts.get(dim(s), 0) + 1
        return counts


def field_from_matching(delta: SimplicialComplex, diagram: HasseDiagram, matching) -> DiscreteGradientField:
    pairs = {}
    for e in matching.matched:
        lo, hi = diagram.arc_of_edge(e)
        pairs[diagram.cell_of[lo]] = diagram.cell_of[hi]
    return DiscreteGradientField(delta, pairs, diagram.variant)


def compute_gradient(delta: SimplicialComplex, modified: bool = False) -> DiscreteGradientField:
    """Greedy matching on the (plain or modified) Hasse diagram of ``delta``."""
    diagram = modified_hasse_for_complex(delta) if modified else build_hasse(delta)
    matching = greedy_match(diagram.to_match_graph())
    return field_from_matching(delta, diagram, matching)


def is_gradient(field_: DiscreteGradientField) -> bool:
    """True iff no dimension band contains a closed V-path.

    Per band (p, p+1) the V-path digraph has matched arcs pointing up and all
    other facet arcs pointing down; the field is a gradient iff every band is
    acyclic.
    """
    delta = field_.complex
    for p in range(delta.dim):
        adjacency: dict[Simplex, list[Simplex]] = {}
        for sigma, tau in field_.pairs.items():
            if dim(sigma) == p:
                adjacency.setdefault(sigma, []).append(tau)
        for tau in delta.simplices_of_dim(p + 1):
            partner = field_.partner_down.get(tau)
            downs = [s for s in delta.facets(tau) if s != partner]
            adjacency.setdefault(tau, []).extend(downs)
        if _has_cycle(adjacency):
            return False
    return True


def _has_cycle(adjacency: dict) -> bool:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in adjacency}
    for root in adjacency:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(adjacency[root]))]
        color[root] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in color:
                    continue  # terminal cell, no outgoing arcs
                if color[nxt] == GRAY:
                    return True
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, iter(adjacency[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return False


@dataclass(frozen=True)
class Halo:
    """Vertices one removal or completion away from sigma, and their f-argmin."""

    members: frozenset
    argmin: int


def halo(delta: SimplicialComplex, sigma: Simplex) -> Halo:
    sigma = delta._require(sigma)
    members = set(sigma)
    inside = set(sigma)
    for v in delta.vertices:
        if v not in inside and tuple(sorted(inside | {v})) in delta.simplices:
            members.add(v)
    best = min(members, key=lambda v: sort_key(delta.valuation[v]))
    return Halo(frozenset(members), best)


@dataclass(frozen=True)
class VPath:
    """Sequence sigma_0, tau_0, sigma_1, ..., sigma_n."""

    cells: tuple

    @property
    def sigmas(self) -> tuple:
        return self.cells[::2]

    @property
    def taus(self) -> tuple:
        return self.cells[1::2]

    @property
    def steps(self) -> int:
        return len(self.cells) // 2

    def is_trivial(self) -> bool:
        return len(self.cells) == 1


def gain_loss_sets(path: VPath) -> tuple[frozenset, frozenset]:
    """Vertices gained (tau_i minus sigma_i) and lost (tau_i minus sigma_i+1)."""
    gained, lost = set(), set()
    sigmas, taus = path.sigmas, path.taus
    for i, tau in enumerate(taus):
        gained.update(set(tau) - set(sigmas[i]))
        lost.update(set(tau) - set(sigmas[i + 1]))
    return frozenset(gained), frozenset(lost)


def trace_vpath(field_: DiscreteGradientField, start: Simplex) -> VPath:
    """Single-path trace: at each upper cell continue through the lex-smallest facet."""
    delta = field_.complex
    start = delta._require(start)
    cells = [start]
    seen = {start}
    sigma = start
    while sigma in field_.pairs:
        tau = field_.pairs[sigma]
        nexts = sorted((s for s in delta.facets(tau) if s != sigma),
                       key=lambda s: sort_key(delta.f_set(s)))
        if not nexts:
            break
        cells.append(tau)
        sigma = nexts[0]
        if sigma in seen:
            raise CycleDetected(f"V-path revisits {sigma}")
        seen.add(sigma)
        cells.append(sigma)
    return VPath(tuple(cells))


def vpath_tree(field_: DiscreteGradientField, start: Simplex,
               max_paths: int = 100_000) -> list[VPath]:
    """All maximal V-paths out of ``start`` (every facet continuation explored)."""
    delta = field_.complex
    start = delta._require(start)
    results: list[VPath] = []

    def walk(cells: list, on_branch: set):
        if len(results) >= max_paths:
            raise BudgetExceeded(f"more than {max_paths} V-paths from {start}")
        sigma = cells[-1]
        if sigma not in field_.pairs:
            results.append(VPath(tuple(cells)))
            return
        tau = field_.pairs[sigma]
        nexts = [s for s in delta.facets(tau) if s != sigma]
        if not nexts:
            results.append(VPath(tuple(cells)))
            return
        for nxt in sorted(nexts):
            if nxt in on_branch:
                raise CycleDetected(f"V-path revisits {nxt}")
            cells.append(tau)
            cells.append(nxt)
            on_branch.add(nxt)
            walk(cells, on_branch)
            on_branch.discard(nxt)
            cells.pop()
            cells.pop()

    walk([start], {start})
    return results


def all_vpaths(field_: DiscreteGradientField, max_paths_per_start: int = 100_000) -> Iterator[VPath]:
    """Maximal V-path trees from every cell, in deterministic order."""
    for sigma in field_.complex.sorted_simplices():
        yield from vpath_tree(field_, sigma, max_paths_per_start)


def steepest_descent_check(delta: SimplicialComplex, field_: DiscreteGradientField) -> list[str]:
    """Violations of the steepest-descent pairing rule and the critical-cell test.

    Every cell whose halo argmin lies outside itself must be matched up with
    the completion by that argmin.  Every critical cell must contain its halo
    argmin and, above dimension zero, removing the argmin must put the
    remainder's own argmin outside the cell.
    """
    problems = []
    for sigma in delta.sorted_simplices():
        h = halo(delta, sigma)
        if h.argmin not in sigma:
            expected = tuple(sorted(set(sigma) | {h.argmin}))
            if field_.pairs.get(sigma) != expected:
                problems.append(f"{sigma}: argmin {h.argmin} outside but pair is "
                                f"{field_.pairs.get(sigma)}, expected {expected}")
        if field_.is_critical(sigma):
            if h.argmin not in sigma:
                problems.append(f"critical {sigma} does not contain its argmin {h.argmin}")
            elif len(sigma) > 1:
                rest = tuple(v for v in sigma if v != h.argmin)
                if halo(delta, rest).argmin in sigma:
                    problems.append(f"critical {sigma}: argmin of {rest} falls back inside")
    return problems
