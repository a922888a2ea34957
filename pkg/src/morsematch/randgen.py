"""Deterministic random instances for the verification harness.

Every generator is a pure function of its seed; the same seed always yields
the same instance.
"""

from __future__ import annotations

import random

from .cat0 import Pip
from .complexes import SimplicialComplex, build_complex
from .matching import WeightedMatchGraph, match_graph


def generate_random_complex(seed: int, max_vertices: int, max_dim: int) -> SimplicialComplex:
    """Random maximal simplices over a random injective valuation."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    values = rng.sample(range(1, 20 * n + 20), n)
    valuation = {v: float(values[v]) for v in range(n)}
    count = rng.randint(1, max(2, 2 * n))
    tops = []
    for _ in range(count):
        size = rng.randint(1, min(max_dim + 1, n))
        tops.append(rng.sample(range(n), size))
    return build_complex(tops, valuation)


def random_weighted_graph(seed: int, max_vertices: int = 12,
                          edge_probability: float = 0.4) -> WeightedMatchGraph:
    """Random graph with globally distinct weights (hence adjacent-tie free)."""
    rng = random.Random(seed)
    n = rng.randint(2, max_vertices)
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = [e for e in candidates if rng.random() < edge_probability]
    if not chosen:
        chosen = [rng.choice(candidates)]
    weights = rng.sample(range(1, 10 * len(chosen) + 10), len(chosen))
    return match_graph({e: float(w) for e, w in zip(chosen, weights)},
                       extra_vertices=range(n))


def generate_random_pip(seed: int, max_elements: int = 8) -> Pip:
    """Random valid poset with inconsistent pairs.

    Cover arcs always point from lower to higher index, so the relation is a
    partial order by construction; inconsistent pairs are drawn from the
    incomparable pairs that have no common upper bound.
    """
    rng = random.Random(seed)
    n = rng.randint(1, max_elements)
    names = [f"p{i}" for i in range(n)]
    covers = []
    for j in range(1, n):
        for i in range(j):
            if rng.random() < 0.25:
                covers.append((names[i], names[j]))
    pip = Pip(names, covers)
    candidates = []
    for p in range(n):
        for q in range(p + 1, n):
            if pip.leq(p, q) or pip.leq(q, p):
                continue
            if (pip.above[p] | 1 << p) & (pip.above[q] | 1 << q):
                continue
            candidates.append((names[p], names[q]))
    chosen = [pair for pair in candidates if rng.random() < 0.35]
    return Pip(names, covers, chosen)
