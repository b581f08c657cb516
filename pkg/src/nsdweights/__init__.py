"""Neighbour sum-distinguishing {a,b}-edge-weightings of bipartite graphs.

Exhaustive search, odd multi-cactus recognition, tree classification and the
constructions that relate them.
"""

from .cactus import CactusCertificate, CactusRecipe, CycleSpec, build_from_recipe, cactus_pattern_weighting, recognize
from .classify import Verdict, classify
from .errors import BudgetExceeded, GraphError, NonBipartite, ParseError
from .graph import MultiGraph, bipartition, bridges, parse_edge_list, serialize_edge_list
from .oracle import achievable_degree_set, oracle_exists_proper
from .parity import f_factor_mod2, local_max_weighting, parity_proper_weighting, remove_edges_connected
from .trees import classify_tree, enumerate_trees, vertex_status
from .weighting import WeightPair, Weighting, conflicts, weighted_degrees

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CactusCertificate", "CactusRecipe", "CycleSpec", "GraphError",
    "MultiGraph", "NonBipartite", "ParseError", "Verdict", "WeightPair", "Weighting",
    "achievable_degree_set", "bipartition", "bridges", "build_from_recipe", "classify",
    "classify_tree", "conflicts", "enumerate_trees", "f_factor_mod2", "cactus_pattern_weighting",
    "local_max_weighting", "oracle_exists_proper", "parity_proper_weighting", "parse_edge_list",
    "recognize", "remove_edges_connected", "serialize_edge_list", "vertex_status",
    "weighted_degrees",
]
