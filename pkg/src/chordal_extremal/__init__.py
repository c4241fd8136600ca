"""Chordal graphs of minimum size with given order and minimum degree."""

from .edit import EditTrace, augment_edge, delete_edge_at_simplicial, raise_min_degree, reduce_min_degree, replay
from .extremal import ConstructionResult, ExtremalParams, construct_b, construct_q, g_formula, phi
from .graph import (
    Edge,
    Graph,
    add_edge,
    cut_edges,
    delete_edge,
    disjoint_union,
    from_edges,
    is_connected,
    join,
    min_degree,
)
from .graph6 import parse_graph6, to_graph6
from .oracle import OracleReport, brute_force_min_size, random_chordal, verify_tables
from .recognition import (
    ChordalityVerdict,
    dirac_pair,
    is_chordal,
    is_dominating,
    is_perfect_elimination,
    mcs_order,
    simplicial_vertices,
)

__version__ = "0.1.0"
