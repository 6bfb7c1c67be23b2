"""Exact tools for maps on closed surfaces: delta-matroids, homological
incidence representations, greedy and peeling algorithms, and brute-force
verification oracles."""

from .deltamatroid import (BasisFamily, GroundSet, check_even,
                           check_symmetric_exchange, enumerate_bases,
                           format_subset, greedy, map_independence_oracle,
                           parse_subset)
from .enumeration import enumerate_maps
from .homology import (Cycle, Representation, SpineGraph, build_spine,
                       covertex_link_cycle, crossing_link_cycle, cycle_basis,
                       incidence_vector, matroid_from_representation,
                       pair_product, representation, vertex_link_cycle)
from .linalg import GF2, RATIONALS, ExactMatrix
from .maps import (ORIENTABLE, SIGNED, CombinatorialMap, CutSurface, Flag,
                   FlagArc, FlagGraph, MapError, MapInfo, contract_edge,
                   cut_surface, dual_map, element_str, flag_graph,
                   format_map, is_independent, is_isomorphic, map_info,
                   parse_element, parse_map, spanning_tree_basis)
from .peeling import ANNULUS, DISK, PeelStep, PeelTrace, peel, verify_trace

__all__ = [
    "ANNULUS", "BasisFamily", "CombinatorialMap", "CutSurface", "Cycle",
    "DISK", "ExactMatrix", "Flag", "FlagArc", "FlagGraph", "GF2", "GroundSet",
    "MapError", "MapInfo", "ORIENTABLE", "PeelStep", "PeelTrace", "RATIONALS",
    "Representation", "SIGNED", "SpineGraph", "build_spine", "check_even",
    "check_symmetric_exchange", "contract_edge", "covertex_link_cycle",
    "crossing_link_cycle", "cut_surface", "cycle_basis", "dual_map",
    "element_str", "enumerate_bases", "enumerate_maps", "flag_graph",
    "format_map", "format_subset", "greedy", "incidence_vector",
    "is_independent", "is_isomorphic", "map_independence_oracle", "map_info",
    "matroid_from_representation", "pair_product", "parse_element",
    "parse_map", "parse_subset", "peel", "representation",
    "spanning_tree_basis", "verify_trace", "vertex_link_cycle",
]

__version__ = "0.1.0"
