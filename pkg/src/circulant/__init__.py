"""Circulant graphs of degree 2 to 9: bounds, distance partitions, defects,
intersection arrays, odd girth, vertex types and exhaustive search."""

from __future__ import annotations

from .analysis import (
    TotalIntersectionArray,
    TypeCensus,
    census_of,
    odd_girth,
    t1_total_formula,
    total_intersection_array,
    vertex_types,
    vt_formula,
)
from .bounds import last_maximal_level, lmac, lmac_closed, mac_bound, s_poly
from .catalog import (
    FamilyEntry,
    catalog_entries,
    catalog_entry,
    class_count,
    generator_family,
    order_formula,
    register_derived,
)
from .core import GraphSpec, connection_set, is_connected, make_graph_spec, neighbors, parse_generators
from .errors import (
    BelowThreshold,
    CirculantError,
    DisconnectedGraph,
    InvalidSpec,
    NegativeDefect,
    RangeTooLarge,
    UnknownFamily,
)
from .partition import (
    DefectProfile,
    LevelAssignment,
    distance_levels,
    level_defects,
    maximal_prefix,
    total_defect,
)
from .search import SearchReport, canonical_form, extremal_search, find_witness, graph_diameter

__version__ = "0.1.0"

__all__ = [
    "GraphSpec", "make_graph_spec", "connection_set", "neighbors", "is_connected", "parse_generators",
    "s_poly", "mac_bound", "lmac", "lmac_closed", "last_maximal_level",
    "LevelAssignment", "DefectProfile", "distance_levels", "level_defects", "maximal_prefix", "total_defect",
    "TotalIntersectionArray", "TypeCensus", "total_intersection_array", "odd_girth", "vertex_types",
    "vt_formula", "t1_total_formula", "census_of",
    "SearchReport", "graph_diameter", "canonical_form", "extremal_search", "find_witness",
    "FamilyEntry", "order_formula", "class_count", "generator_family", "register_derived",
    "catalog_entry", "catalog_entries",
    "CirculantError", "InvalidSpec", "DisconnectedGraph", "NegativeDefect", "UnknownFamily",
    "BelowThreshold", "RangeTooLarge",
]
