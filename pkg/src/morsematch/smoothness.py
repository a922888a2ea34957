"""Discrete smoothness: the sampling condition under which steepest descent
fully characterizes the greedy matching.

A cell whose halo argmin lies inside itself is smooth when every cofacet,
after dropping that argmin, still points to the same argmin.  Cells whose
argmin lies outside are vacuously smooth.  On smooth complexes the matching
is computable cell-by-cell in one linear pass.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, Simplex, barycentric_subdivide
from .errors import NotSmooth
from .gradient import DiscreteGradientField, halo
from .ordering import sort_key


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    witnesses: tuple  # (sigma, tau, argmin of sigma, argmin of tau minus argmin)


def check_smooth(delta: SimplicialComplex) -> SmoothnessReport:
    witnesses = []
    for sigma in delta.sorted_simplices():
        h = halo(delta, sigma).argmin
        if h not in sigma:
            continue
        for tau in sorted(delta.cofacets(sigma)):
            reduced = tuple(v for v in tau if v != h)
            h2 = halo(delta, reduced).argmin
            if h2 != h:
                witnesses.append((sigma, tau, h, h2))
    return SmoothnessReport(not witnesses, tuple(witnesses))


def smooth_fast_match(delta: SimplicialComplex) -> DiscreteGradientField:
    """Linear matcher valid on smooth complexes only.

    Pairs every cell whose halo argmin lies outside with the completion by
    that argmin; everything else is critical.  Refuses non-smooth input, where
    the construction has no correctness guarantee.
    """
    report = check_smooth(delta)
    if not report.smooth:
        raise NotSmooth(f"{len(report.witnesses)} smoothness violations, "
                        f"first at {report.witnesses[0][0]}")
    pairs = {}
    for sigma in delta.sorted_simplices():
        h = halo(delta, sigma).argmin
        if h not in sigma:
            pairs[sigma] = tuple(sorted(set(sigma) | {h}))
    uppers = set(pairs.values())
    assert len(uppers) == len(pairs) and not uppers & set(pairs), \
        "fast matcher produced a non-matching on smooth input"
    return DiscreteGradientField(delta, pairs)


def faithful_critical_check(delta: SimplicialComplex,
                            field_: DiscreteGradientField) -> list[str]:
    """Violations of the local structure around critical cells (smooth input).

    For every critical cell: all its facets are matched above, every cofacet
    is matched with the facet missing the argmin, and criticality coincides
    with the argmin-inside test in both directions.
    """
    problems = []
    for sigma in delta.sorted_simplices():
        h = halo(delta, sigma).argmin
        inside = h in sigma
        if len(sigma) > 1 and inside:
            rest = tuple(v for v in sigma if v != h)
            inside = halo(delta, rest).argmin not in sigma
        if field_.is_critical(sigma) != inside:
            problems.append(f"{sigma}: critical={field_.is_critical(sigma)} but "
                            f"argmin test says {inside}")
        if not field_.is_critical(sigma):
            continue
        for rho in sorted(delta.facets(sigma)):
            if rho not in field_.pairs:
                problems.append(f"facet {rho} of critical {sigma} is not matched above")
        for tau in sorted(delta.cofacets(sigma)):
            lower = tuple(v for v in tau if v != h)
            if field_.pairs.get(lower) != tau:
                problems.append(f"cofacet {tau} of critical {sigma} is not matched "
                                f"with {lower}")
    return problems


def strict_flow_check(delta: SimplicialComplex, field_: DiscreteGradientField,
                      paths) -> list[str]:
    """Strictly decreasing lex values along V-paths that end at a critical cell."""
    problems = []
    for path in paths:
        if not field_.is_critical(path.cells[-1]):
            continue
        sigmas = path.sigmas
        for a, b in zip(sigmas, sigmas[1:]):
            if not sort_key(delta.f_set(b)) < sort_key(delta.f_set(a)):
                problems.append(f"not strictly decreasing at {a} -> {b}")
    return problems


def check_subdivision_chain_minimizers(delta: SimplicialComplex,
                                       subdivided: SimplicialComplex | None = None) -> list[str]:
    """Closed form of the smallest chain extension in a subdivision.

    For a chain cell whose prefix sigma_0 < ... < sigma_{i-1} is a full flag
    (consecutive dimensions from a vertex) and whose last step skips at least
    two vertices, the lex-smallest vertex extending the prefix chain equals
    sigma_{i-1} plus the f-smallest vertex of sigma_i minus sigma_{i-1};
    checked against brute-force minimization over the prefix's halo.
    """
    prime = subdivided if subdivided is not None else barycentric_subdivide(delta)
    table = prime.barycenter_of
    problems = []
    for chain in prime.sorted_simplices():
        if len(chain) < 2:
            continue
        cells = sorted((table[b] for b in chain), key=len)
        ids = sorted(chain, key=lambda b: len(table[b]))
        for i in range(1, len(cells)):
            flag_prefix = all(len(cells[j]) == j + 1 for j in range(i))
            if not flag_prefix or len(cells[i]) - len(cells[i - 1]) < 2:
                continue
            prefix = tuple(sorted(ids[: i + 1]))
            h = halo(prime, prefix)
            outside = [b for b in h.members if b not in prefix]
            brute = min(outside, key=lambda b: sort_key(prime.f(b)))
            low, high = cells[i - 1], cells[i]
            added = min((v for v in high if v not in low),
                        key=lambda v: sort_key(delta.valuation[v]))
            predicted = tuple(sorted(set(low) | {added}))
            if table[brute] != predicted:
                problems.append(f"chain {cells}: prefix {i} minimizer {table[brute]} "
                                f"!= predicted {predicted}")
    return problems
