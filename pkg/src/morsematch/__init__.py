"""Greedy Morse matchings on simplicial and cubical complexes."""

from .cat0 import CollapseCertificate, CubeCell, CubeComplex, Pip, collapse_cat0, \
    cube_order_compare, enumerate_ideals, validate_pip
from .complexes import SimplicialComplex, barycentric_subdivide, build_complex, simplex
from .errors import MorsematchError
from .gradient import DiscreteGradientField, compute_gradient, gain_loss_sets, halo, \
    is_gradient, trace_vpath, vpath_tree
from .hasse import HasseDiagram, build_hasse, build_modified_hasse, modified_hasse_for_complex
from .matching import Matching, WeightedMatchGraph, enumerate_maximal_alternating_paths, \
    greedy_match, match_graph, threshold_subgraph
from .ordering import INFINITY, ValueSet, lex_compare, shortlex_compare
from .smoothness import check_smooth, smooth_fast_match
from .verify import SuiteConfig, run_verification_suite

__version__ = "0.1.0"

__all__ = [
    "CollapseCertificate", "CubeCell", "CubeComplex", "Pip", "collapse_cat0",
    "cube_order_compare", "enumerate_ideals", "validate_pip",
    "SimplicialComplex", "barycentric_subdivide", "build_complex", "simplex",
    "MorsematchError",
    "DiscreteGradientField", "compute_gradient", "gain_loss_sets", "halo",
    "is_gradient", "trace_vpath", "vpath_tree",
    "HasseDiagram", "build_hasse", "build_modified_hasse", "modified_hasse_for_complex",
    "Matching", "WeightedMatchGraph", "enumerate_maximal_alternating_paths",
    "greedy_match", "match_graph", "threshold_subgraph",
    "INFINITY", "ValueSet", "lex_compare", "shortlex_compare",
    "check_smooth", "smooth_fast_match",
    "SuiteConfig", "run_verification_suite",
    "__version__",
]
