"""Finite simplicial complexes with an injective vertex valuation.

Simplices are canonical tuples of strictly increasing vertex ids.  A complex
stores every face explicitly (closure is computed at build time), keeps the
vertex valuation, and precomputes facet/cofacet navigation.  Everything is
immutable after construction.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateValue, EmptySimplex, NotInComplex, UnknownVertex
from .ordering import ValueSet, sort_key

Simplex = tuple  # sorted tuple of vertex ids


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form: sorted, deduplicated, non-empty vertex tuple."""
    vs = tuple(sorted(set(vertices)))
    if not vs:
        raise EmptySimplex("a simplex needs at least one vertex")
    return vs


def dim(sigma: Simplex) -> int:
    return len(sigma) - 1


def faces(sigma: Simplex):
    """All non-empty proper and improper subsets of sigma."""
    for size in range(1, len(sigma) + 1):
        yield from combinations(sigma, size)


class SimplicialComplex:
    """Closed-under-faces simplex set plus an injective valuation."""

    def __init__(self, simplices: Iterable[Simplex], valuation: Mapping[int, object],
                 barycenter_of: Mapping[int, Simplex] | None = None):
        self.simplices = frozenset(simplices)
        self.valuation = dict(valuation)
        self.dim = max((dim(s) for s in self.simplices), default=-1)
        # subdivision keeps the b(sigma) <-> sigma side table for export/debugging
        self.barycenter_of = dict(barycenter_of) if barycenter_of else None
        self._cofacets: dict[Simplex, tuple[Simplex, ...]] = {s: () for s in self.simplices}
        grow: dict[Simplex, list[Simplex]] = {}
        for tau in self.simplices:
            if len(tau) > 1:
                for rho in combinations(tau, len(tau) - 1):
                    grow.setdefault(rho, []).append(tau)
        for rho, ups in grow.items():
            self._cofacets[rho] = tuple(sorted(ups))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.valuation))

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def simplices_of_dim(self, p: int) -> list[Simplex]:
        return sorted(s for s in self.simplices if dim(s) == p)

    def sorted_simplices(self) -> list[Simplex]:
        return sorted(self.simplices, key=lambda s: (len(s), s))

    def maximal_simplices(self) -> list[Simplex]:
        return sorted(s for s in self.simplices if not self._cofacets[s])

    def facets(self, sigma: Simplex) -> set[Simplex]:
        self._require(sigma)
        if len(sigma) == 1:
            return set()
        return {rho for rho in combinations(sigma, len(sigma) - 1)}

    def cofacets(self, sigma: Simplex) -> set[Simplex]:
        self._require(sigma)
        return set(self._cofacets[sigma])

    def facets_and_cofacets(self, sigma: Simplex) -> tuple[set[Simplex], set[Simplex]]:
        return self.facets(sigma), self.cofacets(sigma)

    def f(self, vertex: int):
        return self.valuation[vertex]

    def f_set(self, sigma: Simplex) -> ValueSet:
        """Set of vertex values of sigma, the lex-order key of the simplex."""
        return ValueSet(self.valuation[v] for v in sigma)

    def euler_characteristic(self) -> int:
        return sum(-1 if dim(s) % 2 else 1 for s in self.simplices)

    def _require(self, sigma) -> Simplex:
        key = tuple(sigma)
        if key not in self.simplices:
            raise NotInComplex(f"{key} is not a simplex of the complex")
        return key


def build_complex(maximal_simplices: Sequence[Iterable[int]],
                  valuation: Mapping[int, object]) -> SimplicialComplex:
    """Close the given simplices under taking faces and validate the valuation.

    The valuation must cover every referenced vertex and be injective on the
    vertices that actually occur.  Entries for unused vertices are dropped.
    """
    closed: set[Simplex] = set()
    for raw in maximal_simplices:
        sigma = simplex(raw)
        for v in sigma:
            if v not in valuation:
                raise UnknownVertex(f"vertex {v} has no valuation entry")
        closed.update(faces(sigma))
    used = {v for s in closed for v in s}
    vals = {v: valuation[v] for v in sorted(used)}
    seen: dict = {}
    for v, value in vals.items():
        if value in seen:
            raise DuplicateValue(f"vertices {seen[value]} and {v} share the value {value!r}")
        seen[value] = v
    # mutual comparability (uniform nesting depth) is required for lex sorting
    sorted(vals.values(), key=sort_key)
    return SimplicialComplex(closed, vals)


def barycentric_subdivide(delta: SimplicialComplex) -> SimplicialComplex:
    """Complex of chains of faces of ``delta``.

    Every simplex sigma of the input becomes a vertex b(sigma) valued by the
    set of its vertex values; the p-simplices of the output are the chains
    sigma_0 < sigma_1 < ... < sigma_p ordered by strict inclusion.  The
    returned complex carries the b(sigma) -> sigma table in `barycenter_of`.
    """
    cells = delta.sorted_simplices()
    ids = {sigma: i for i, sigma in enumerate(cells)}
    valuation = {ids[sigma]: delta.f_set(sigma) for sigma in cells}

    flags: list[list[int]] = []

    def descend(chain: list[Simplex]):
        head = chain[-1]
        if len(head) == 1:
            flags.append([ids[s] for s in reversed(chain)])
            return
        for rho in sorted(combinations(head, len(head) - 1)):
            chain.append(rho)
            descend(chain)
            chain.pop()

    for top in delta.maximal_simplices():
        descend([top])

    result = build_complex(flags, valuation)
    return SimplicialComplex(result.simplices, result.valuation,
                             barycenter_of={ids[s]: s for s in cells})
