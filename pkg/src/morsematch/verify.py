"""Brute-force verification suite.

Each named check generates random instances, runs the relevant pipeline and
evaluates the guaranteed property with an exhaustive oracle (alternating-path
enumeration, full V-path trees, ideal enumeration).  A check fails loudly
with the replayable instance seed of its first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import cat0 as c0
from .complexes import barycentric_subdivide, dim, faces
from .errors import BudgetExceeded
from .gradient import all_vpaths, compute_gradient, gain_loss_sets, halo, is_gradient, \
    steepest_descent_check
from .matching import enumerate_maximal_alternating_paths, greedy_match, threshold_subgraph
from .ordering import ValueSet, lex_compare, saturation_at_least, shortlex_compare, sort_key
from .randgen import generate_random_complex, generate_random_pip, random_weighted_graph
from .smoothness import check_smooth, check_subdivision_chain_minimizers, \
    faithful_critical_check, smooth_fast_match, strict_flow_check


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    trials: int = 50
    max_vertices: int = 12
    max_dim: int = 3
    checks: tuple[str, ...] | None = None  # None selects every check


@dataclass
class CheckOutcome:
    name: str
    trials: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "trials": self.trials, "failures": self.failures,
                "skipped": self.skipped, "passed": self.passed,
                "first_failure": self.first_failure}


@dataclass
class SuiteReport:
    config: SuiteConfig
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_dict(self) -> dict:
        return {
            "seed": self.config.seed, "trials": self.config.trials,
            "max_vertices": self.config.max_vertices, "max_dim": self.config.max_dim,
            "passed": self.passed,
            "checks": [o.to_dict() for o in self.outcomes],
        }


def _lex_less(delta, a, b) -> bool:
    return lex_compare(delta.f_set(a), delta.f_set(b)) < 0


# ---------------------------------------------------------------- checks

def check_ordering_total_order(seed: int, cfg: SuiteConfig) -> str | None:
    """Lex and shortlex are strict total orders on subsets of a small ground set."""
    ground = [5.0, 4.0, 3.0, 2.0, 1.0]
    subsets = [ValueSet(c) for r in range(len(ground) + 1)
               for c in combinations(ground, r)]
    for compare in (lex_compare, shortlex_compare):
        for a in subsets:
            for b in subsets:
                cab, cba = compare(a, b), compare(b, a)
                if cab != -cba:
                    return f"{compare.__name__} not antisymmetric on {a}, {b}"
                if (cab == 0) != (set(a.elements) == set(b.elements)):
                    return f"{compare.__name__} equality mismatch on {a}, {b}"
        for a in subsets:
            for b in subsets:
                if compare(a, b) >= 0:
                    continue
                for c in subsets:
                    if compare(b, c) < 0 and compare(a, c) >= 0:
                        return f"{compare.__name__} not transitive on {a}, {b}, {c}"
    return None


check_ordering_total_order.deterministic = True


def check_maximal_path_min_edges(seed: int, cfg: SuiteConfig) -> str | None:
    """Minimum edges of every maximal alternating path are matched, and every
    path vertex is saturated at least at that weight."""
    graph = random_weighted_graph(seed, min(cfg.max_vertices, 12))
    matching = greedy_match(graph)
    paths = enumerate_maximal_alternating_paths(graph, matching,
                                                max_len=min(len(graph.edges), 9))
    for path in paths:
        for e in path.min_edges(graph.weight):
            if e not in matching.matched:
                return f"E_min edge {e} of path {path.path_vertices} unmatched"
            for v in path.path_vertices:
                if not saturation_at_least(matching.saturation[v], graph.weight[e]):
                    return f"vertex {v} saturated below the path minimum {e}"
    return None


def check_threshold_matched(seed: int, cfg: SuiteConfig) -> str | None:
    """Edges surviving in the threshold subgraph at their own weight are matched."""
    graph = random_weighted_graph(seed, min(cfg.max_vertices, 12))
    matching = greedy_match(graph)
    for e in sorted(graph.edges):
        sub = threshold_subgraph(graph, matching, graph.weight[e])
        if e in sub.edges and e not in matching.matched:
            return f"edge {e} survives at its own weight but is unmatched"
    return None


def check_gradient_acyclic(seed: int, cfg: SuiteConfig) -> str | None:
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    if not is_gradient(compute_gradient(delta)):
        return f"greedy field on seed {seed} contains a closed V-path"
    return None


def check_decreasing_flow(seed: int, cfg: SuiteConfig) -> str | None:
    """Critical endpoint of every V-path is lex-smaller than every other step."""
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    gradient = compute_gradient(delta)
    for path in all_vpaths(gradient):
        if path.is_trivial() or not gradient.is_critical(path.cells[-1]):
            continue
        last = path.cells[-1]
        for sigma in path.sigmas[:-1]:
            if not _lex_less(delta, last, sigma):
                return f"f({last}) not below f({sigma}) on path {path.cells}"
    return None


def check_steepest_descent(seed: int, cfg: SuiteConfig) -> str | None:
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    problems = steepest_descent_check(delta, compute_gradient(delta))
    return problems[0] if problems else None


def check_halo_monotonic(seed: int, cfg: SuiteConfig) -> str | None:
    """Halos shrink and argmins grow along inclusions."""
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    for tau in delta.sorted_simplices():
        h_tau = halo(delta, tau)
        for sigma in faces(tau):
            h_sigma = halo(delta, sigma)
            if not h_tau.members <= h_sigma.members:
                return f"halo of {tau} not inside halo of {sigma}"
            if sort_key(delta.valuation[h_sigma.argmin]) > sort_key(delta.valuation[h_tau.argmin]):
                return f"argmin of {sigma} above argmin of {tau}"
    return None


def check_path_gain_loss(seed: int, cfg: SuiteConfig) -> str | None:
    """Gained and lost vertex sets bracket the endpoint differences."""
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    gradient = compute_gradient(delta)
    for path in all_vpaths(gradient):
        if path.is_trivial():
            continue
        first, last = set(path.cells[0]), set(path.cells[-1])
        gained, lost = gain_loss_sets(path)
        if not (gained - lost <= last - first and lost - gained <= first - last):
            return f"gain/loss difference escapes endpoints on {path.cells}"
        if not (first - last <= lost and last - first <= gained):
            return f"endpoint difference not covered by gain/loss on {path.cells}"
    return None


def check_euler_morse(seed: int, cfg: SuiteConfig) -> str | None:
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    gradient = compute_gradient(delta)
    alternating = sum(-1 if dim(s) % 2 else 1 for s in gradient.critical)
    if alternating != delta.euler_characteristic():
        return f"critical alternating sum {alternating} != Euler characteristic"
    return None


def _small_complex(seed: int, cfg: SuiteConfig):
    return generate_random_complex(seed, min(cfg.max_vertices, 6), min(cfg.max_dim, 2))


def check_subdivision_smooth(seed: int, cfg: SuiteConfig) -> str | None:
    delta = barycentric_subdivide(_small_complex(seed, cfg))
    report = check_smooth(delta)
    if not report.smooth:
        return f"subdivision not smooth, witness {report.witnesses[0]}"
    return None


def check_fast_match_equivalence(seed: int, cfg: SuiteConfig) -> str | None:
    """Fast matcher agrees with the greedy matcher, pair for pair, when smooth."""
    candidates = [barycentric_subdivide(_small_complex(seed, cfg))]
    natural = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    if check_smooth(natural).smooth:
        candidates.append(natural)
    for delta in candidates:
        fast = smooth_fast_match(delta)
        greedy = compute_gradient(delta)
        if fast.pairs != greedy.pairs:
            return f"fast and greedy matchers disagree on seed {seed}"
        if fast.critical != greedy.critical:
            return f"critical sets disagree on seed {seed}"
    return None


def check_faithful_criticality(seed: int, cfg: SuiteConfig) -> str | None:
    delta = barycentric_subdivide(_small_complex(seed, cfg))
    problems = faithful_critical_check(delta, compute_gradient(delta))
    return problems[0] if problems else None


def check_strict_flow(seed: int, cfg: SuiteConfig) -> str | None:
    delta = barycentric_subdivide(_small_complex(seed, cfg))
    gradient = compute_gradient(delta)
    problems = strict_flow_check(delta, gradient, all_vpaths(gradient))
    return problems[0] if problems else None


def check_chain_minimizer(seed: int, cfg: SuiteConfig) -> str | None:
    problems = check_subdivision_chain_minimizers(_small_complex(seed, cfg))
    return problems[0] if problems else None


def check_modified_flow(seed: int, cfg: SuiteConfig) -> str | None:
    """Modified-diagram fields are acyclic with strictly decreasing V-paths."""
    delta = generate_random_complex(seed, cfg.max_vertices, cfg.max_dim)
    gradient = compute_gradient(delta, modified=True)
    if not is_gradient(gradient):
        return f"modified field on seed {seed} contains a closed V-path"
    for path in all_vpaths(gradient):
        sigmas, taus = path.sigmas, path.taus
        for i, tau in enumerate(taus):
            if not _lex_less(delta, tau, sigmas[i]):
                return f"f({tau}) not below f({sigmas[i]}) on {path.cells}"
            if not _lex_less(delta, sigmas[i + 1], tau):
                return f"f({sigmas[i + 1]}) not below f({tau}) on {path.cells}"
    return None


def check_cat0_collapsible(seed: int, cfg: SuiteConfig) -> str | None:
    """Greedy collapse certificate on a random valid poset with inconsistent pairs."""
    pip = generate_random_pip(seed, max_elements=8)
    complex_ = c0.CubeComplex(pip)
    certificate = c0.collapse_cat0(pip)  # closed form + single critical + weights
    if complex_.euler_characteristic() != 1:
        return f"Euler characteristic {complex_.euler_characteristic()} != 1"
    rank = list(range(len(pip)))
    keys = {c: c0.CubeKey(c, rank) for c in complex_.cells}
    # every V-path step sigma -> tau -> next drops strictly in cube order
    for sigma, tau in certificate.pairs.items():
        if not keys[tau] < keys[sigma]:
            return f"matched arc {sigma} -> {tau} not order-decreasing"
        for nxt in complex_.facets(tau):
            if nxt != sigma and not keys[nxt] < keys[sigma]:
                return f"cube order not decreasing across {sigma} -> {tau} -> {nxt}"
    return None


CHECKS = {
    "ordering.total_order": check_ordering_total_order,
    "matching.maximal_path_min_edges": check_maximal_path_min_edges,
    "matching.threshold_matched": check_threshold_matched,
    "gradient.acyclic": check_gradient_acyclic,
    "gradient.decreasing_flow": check_decreasing_flow,
    "gradient.steepest_descent": check_steepest_descent,
    "gradient.halo_monotonic": check_halo_monotonic,
    "gradient.path_gain_loss": check_path_gain_loss,
    "gradient.euler_morse": check_euler_morse,
    "smoothness.subdivision_smooth": check_subdivision_smooth,
    "smoothness.fast_match_equivalence": check_fast_match_equivalence,
    "smoothness.faithful_criticality": check_faithful_criticality,
    "smoothness.strict_flow": check_strict_flow,
    "smoothness.chain_minimizer": check_chain_minimizer,
    "hasse.modified_flow": check_modified_flow,
    "cat0.collapsible": check_cat0_collapsible,
}


def run_verification_suite(cfg: SuiteConfig) -> SuiteReport:
    names = cfg.checks if cfg.checks else tuple(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    report = SuiteReport(cfg)
    for index, name in enumerate(sorted(names)):
        fn = CHECKS[name]
        outcome = CheckOutcome(name)
        trials = 1 if getattr(fn, "deterministic", False) else cfg.trials
        for trial in range(trials):
            instance_seed = cfg.seed + 100_000 * index + trial
            outcome.trials += 1
            try:
                failure = fn(instance_seed, cfg)
            except BudgetExceeded:
                outcome.skipped += 1
                continue
            if failure is not None:
                outcome.failures += 1
                if outcome.first_failure is None:
                    outcome.first_failure = f"seed {instance_seed}: {failure}"
        report.outcomes.append(outcome)
    return report
