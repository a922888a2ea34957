"""Posets with inconsistent pairs and their cube complexes.

A finite poset with upward-closed, incomparable inconsistent pairs encodes a
rooted cube complex: vertices are the consistent order ideals, and a cube
C(I, M) exists for every ideal I and subset M of its maximal elements.  The
greedy matching on the modified Hasse diagram, with cubes ordered shortlex on
ideals and reverse shortlex on marks, collapses everything onto the empty
ideal vertex; this module builds that certificate.

Element sets are bitmasks over element indices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidInput, NotCollapsible
from .hasse import build_modified_hasse
from .matching import greedy_match

IDEAL_BUDGET = 16


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Pip:
    """Finite poset plus minimal inconsistent pairs; closures precomputed."""

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]] = (),
                 inconsistent: Iterable[tuple[str, str]] = ()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise InvalidInput("duplicate element names")
        self.covers = tuple((a, b) for a, b in covers)
        self.minimal_inconsistent = tuple((a, b) for a, b in inconsistent)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        for a, b in self.covers + self.minimal_inconsistent:
            if a not in self.index or b not in self.index:
                raise InvalidInput(f"unknown element in pair ({a!r}, {b!r})")

        ups = [[] for _ in range(n)]
        for a, b in self.covers:
            ups[self.index[a]].append(self.index[b])
        # strictly-above masks by DFS; cycles just saturate and are reported
        # as antisymmetry violations by validate()
        self.above = [0] * n
        for start in range(n):
            seen = 0
            stack = list(ups[start])
            while stack:
                j = stack.pop()
                if seen >> j & 1:
                    continue
                seen |= 1 << j
                stack.extend(ups[j])
            self.above[start] = seen
        self.below = [0] * n
        for i in range(n):
            for j in _bits(self.above[i]):
                self.below[j] |= 1 << i

        pairs: set[frozenset[int]] = set()
        for a, b in self.minimal_inconsistent:
            p, q = self.index[a], self.index[b]
            for p2 in [p, *_bits(self.above[p])]:
                for q2 in [q, *_bits(self.above[q])]:
                    if p2 != q2:
                        pairs.add(frozenset((p2, q2)))
        self.inconsistent_closure = frozenset(pairs)

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.above[i] >> j & 1)

    def names(self, mask: int) -> list[str]:
        return [self.elements[i] for i in _bits(mask)]


def validate_pip(pip: Pip) -> list[str]:
    """Partial-order and inconsistency axioms; returns violations, not raises."""
    problems = []
    for i, e in enumerate(pip.elements):
        if pip.above[i] >> i & 1:
            problems.append(f"cover cycle through {e!r} breaks antisymmetry")
    for pair in sorted(pip.inconsistent_closure, key=sorted):
        p, q = sorted(pair)
        if pip.leq(p, q) or pip.leq(q, p):
            problems.append(f"inconsistent pair ({pip.elements[p]!r}, {pip.elements[q]!r}) "
                            "is comparable")
        common = (pip.above[p] | 1 << p) & (pip.above[q] | 1 << q)
        if common:
            r = next(_bits(common))
            problems.append(f"{pip.elements[r]!r} is above both elements of the "
                            f"inconsistent pair ({pip.elements[p]!r}, {pip.elements[q]!r})")
    return problems


def enumerate_ideals(pip: Pip, budget: int = IDEAL_BUDGET) -> list[int]:
    """All consistent order ideals as bitmasks, empty ideal included."""
    n = len(pip)
    if n > budget:
        raise BudgetExceeded(f"{n} elements exceed the ideal enumeration budget {budget}")
    minimal_pairs = [tuple(sorted((pip.index[a], pip.index[b])))
                     for a, b in pip.minimal_inconsistent]
    ideals = []
    for mask in range(1 << n):
        ok = all(pip.below[i] & ~mask == 0 for i in _bits(mask))
        if ok:
            # downward closed, so it suffices to exclude the minimal pairs
            ok = all(not (mask >> p & 1 and mask >> q & 1) for p, q in minimal_pairs)
        if ok:
            ideals.append(mask)
    return ideals


def ideal_max(pip: Pip, ideal: int) -> int:
    """Mask of the maximal elements of an ideal."""
    return sum(1 << i for i in _bits(ideal) if pip.above[i] & ideal == 0)


@dataclass(frozen=True)
class CubeCell:
    ideal: int
    marks: int

    @property
    def dim(self) -> int:
        return self.marks.bit_count()

    def describe(self, pip: Pip) -> dict:
        return {"ideal": pip.names(self.ideal), "marks": pip.names(self.marks)}


class CubeComplex:
    def __init__(self, pip: Pip, budget: int = IDEAL_BUDGET):
        self.pip = pip
        cells = []
        for ideal in enumerate_ideals(pip, budget):
            top = ideal_max(pip, ideal)
            bits = list(_bits(top))
            for sub in range(1 << len(bits)):
                marks = sum(1 << bits[k] for k in _bits(sub))
                cells.append(CubeCell(ideal, marks))
        self.cells = tuple(sorted(cells, key=lambda c: (c.ideal, c.marks)))
        self.dim = max((c.dim for c in self.cells), default=-1)

    def __len__(self):
        return len(self.cells)

    def facets(self, cell: CubeCell) -> list[CubeCell]:
        out = []
        for v in _bits(cell.marks):
            bit = 1 << v
            out.append(CubeCell(cell.ideal, cell.marks & ~bit))
            out.append(CubeCell(cell.ideal & ~bit, cell.marks & ~bit))
        return out

    def faces(self, cell: CubeCell) -> list[CubeCell]:
        """All faces (every codimension), the 3^dim rule."""
        out = []
        marks = list(_bits(cell.marks))
        for drop in range(1 << len(marks)):
            n1 = sum(1 << marks[k] for k in _bits(drop))
            rest = [m for m in marks if not n1 >> m & 1]
            for keep in range(1 << len(rest)):
                m = sum(1 << rest[k] for k in _bits(keep))
                out.append(CubeCell(cell.ideal & ~n1, m))
        return out

    def vertices_of(self, cell: CubeCell) -> set[CubeCell]:
        marks = list(_bits(cell.marks))
        out = set()
        for drop in range(1 << len(marks)):
            gone = sum(1 << marks[k] for k in _bits(drop))
            out.add(CubeCell(cell.ideal & ~gone, 0))
        return out

    def euler_characteristic(self) -> int:
        return sum(-1 if c.dim % 2 else 1 for c in self.cells)


def _shortlex_key(mask: int, rank: Sequence[int]) -> tuple:
    ranks = sorted((rank[i] for i in _bits(mask)), reverse=True)
    return (len(ranks), tuple(ranks))


@total_ordering
class CubeKey:
    """Total order on cubes: shortlex on ideals, reverse shortlex on marks."""

    __slots__ = ("ideal_key", "marks_key")

    def __init__(self, cell: CubeCell, rank: Sequence[int]):
        self.ideal_key = _shortlex_key(cell.ideal, rank)
        self.marks_key = _shortlex_key(cell.marks, rank)

    def __eq__(self, other):
        return (isinstance(other, CubeKey)
                and self.ideal_key == other.ideal_key
                and self.marks_key == other.marks_key)

    def __lt__(self, other):
        if self.ideal_key != other.ideal_key:
            return self.ideal_key < other.ideal_key
        return self.marks_key > other.marks_key

    def __hash__(self):
        return hash((self.ideal_key, self.marks_key))

    def __repr__(self):
        return f"CubeKey({self.ideal_key}, {self.marks_key})"


def _element_rank(pip: Pip, element_order: Sequence[str] | None) -> list[int]:
    if element_order is None:
        return list(range(len(pip)))
    if sorted(element_order) != sorted(pip.elements):
        raise InvalidInput("element_order must be a permutation of the elements")
    rank = [0] * len(pip)
    for r, name in enumerate(element_order):
        rank[pip.index[name]] = r
    return rank


def cube_order_compare(c1: CubeCell, c2: CubeCell, pip: Pip,
                       element_order: Sequence[str] | None = None) -> int:
    k1 = CubeKey(c1, _element_rank(pip, element_order))
    k2 = CubeKey(c2, _element_rank(pip, element_order))
    return 0 if k1 == k2 else (-1 if k1 < k2 else 1)


def opposite_facet(tau: CubeCell, sigma: CubeCell) -> CubeCell:
    """The facet of tau parallel to its facet sigma."""
    if sigma.ideal == tau.ideal:
        v = tau.marks & ~sigma.marks
        return CubeCell(tau.ideal & ~v, tau.marks & ~v)
    v = tau.ideal & ~sigma.ideal
    return CubeCell(tau.ideal, tau.marks & ~v)


@dataclass(frozen=True)
class CollapseCertificate:
    pairs: dict  # lower cube -> upper cube
    critical: frozenset
    collapse_order: tuple  # (free face, coface) pairs in removal order


def modified_cube_diagram(complex_: CubeComplex,
                          element_order: Sequence[str] | None = None):
    """Modified Hasse diagram of a cube complex plus the cube order keys."""
    rank = _element_rank(complex_.pip, element_order)
    keys = {c: CubeKey(c, rank) for c in complex_.cells}
    diagram = build_modified_hasse(
        complex_.cells, complex_.facets, keys.__getitem__,
        lambda sigma, tau: keys[opposite_facet(tau, sigma)])
    return diagram, keys


def closed_form_pairs(complex_: CubeComplex, rank: Sequence[int]) -> dict:
    """The max-of-I_max matching rule every greedy run must reproduce."""
    pairs = {}
    for cell in complex_.cells:
        if cell.ideal == 0:
            continue
        top = ideal_max(complex_.pip, cell.ideal)
        p = max(_bits(top), key=lambda i: rank[i])
        bit = 1 << p
        if not cell.marks >> p & 1:
            pairs[cell] = CubeCell(cell.ideal, cell.marks | bit)
    return pairs


def collapse_cat0(pip: Pip, element_order: Sequence[str] | None = None,
                  budget: int = IDEAL_BUDGET,
                  check_weight_cases: bool = True) -> CollapseCertificate:
    """Greedy matching on the modified Hasse diagram of the cube complex.

    Certifies collapsibility: the matching must equal the closed-form rule,
    leave only the empty-ideal vertex critical, and admit an elementary
    collapse order.  Raises NotCollapsible when the certificate fails, which
    for a validated input would indicate a bug.
    """
    violations = validate_pip(pip)
    if violations:
        raise InvalidInput("; ".join(violations))
    complex_ = CubeComplex(pip, budget)
    rank = _element_rank(pip, element_order)
    diagram, keys = modified_cube_diagram(complex_, element_order)
    matching = greedy_match(diagram.to_match_graph())
    pairs = {}
    for e in matching.matched:
        lo, hi = diagram.arc_of_edge(e)
        pairs[diagram.cell_of[lo]] = diagram.cell_of[hi]

    expected = closed_form_pairs(complex_, rank)
    if pairs != expected:
        raise NotCollapsible("greedy matching deviates from the max-of-I_max rule")
    critical = frozenset(c for c in complex_.cells
                         if c not in pairs and c not in set(pairs.values()))
    if critical != {CubeCell(0, 0)}:
        raise NotCollapsible(f"critical cells {sorted(critical, key=keys.__getitem__)} "
                             "instead of the empty-ideal vertex")

    if check_weight_cases:
        problems = check_matched_arc_minimality(complex_, diagram, pairs, keys)
        if problems:
            raise NotCollapsible(problems[0])

    order = _collapse_order(complex_, pairs, keys)
    return CollapseCertificate(pairs, critical, tuple(order))


def check_matched_arc_minimality(complex_: CubeComplex, diagram, pairs, keys) -> list[str]:
    """Each matched arc must be strictly lighter than every arc at either end."""
    incident: dict[CubeCell, list] = {}
    for (lo, hi), w in diagram.arc_weight.items():
        a, b = diagram.cell_of[lo], diagram.cell_of[hi]
        incident.setdefault(a, []).append(((a, b), w))
        incident.setdefault(b, []).append(((a, b), w))
    problems = []
    for sigma, tau in pairs.items():
        w0 = keys[opposite_facet(tau, sigma)]
        for cell in (sigma, tau):
            for arc, w in incident.get(cell, ()):
                if arc == (sigma, tau):
                    continue
                if not w0 < w:
                    problems.append(f"arc {arc} with weight {w} undercuts the "
                                    f"matched pair at {sigma}")
    return problems


def _collapse_order(complex_: CubeComplex, pairs: dict, keys) -> list:
    """Peel free matched pairs; smallest free face first for determinism."""
    cofaces: dict[CubeCell, list[CubeCell]] = {c: [] for c in complex_.cells}
    for cell in complex_.cells:
        for face in complex_.faces(cell):
            if face != cell:
                cofaces[face].append(cell)
    count = {c: len(cofaces[c]) for c in complex_.cells}
    removed: set[CubeCell] = set()
    heap = [(keys[s], i, s) for i, s in enumerate(sorted(pairs, key=keys.__getitem__))
            if count[s] == 1]
    heapq.heapify(heap)
    order = []
    tie = len(pairs)
    while heap:
        _, _, sigma = heapq.heappop(heap)
        if sigma in removed or count[sigma] != 1:
            continue
        tau = pairs[sigma]
        live = [c for c in cofaces[sigma] if c not in removed]
        if live != [tau]:
            raise NotCollapsible(f"free face {sigma} has unexpected cofaces {live}")
        order.append((sigma, tau))
        for cell in (sigma, tau):
            removed.add(cell)
            for face in complex_.faces(cell):
                if face == cell or face in removed:
                    continue
                count[face] -= 1
                if count[face] == 1 and face in pairs:
                    heapq.heappush(heap, (keys[face], tie, face))
                    tie += 1
    if len(order) != len(pairs):
        raise NotCollapsible(f"collapse stalled after {len(order)} of {len(pairs)} pairs")
    return order
