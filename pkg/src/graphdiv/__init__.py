"""Divisibility, perfection and colouring tools for small graphs."""

from .divider import Division, color_by_division, divide, verify_division
from .errors import CapExceeded, OrderingError, TheoremViolation
from .evenhole import is_even_hole_free, shortest_even_hole
from .formats import encode_graph6, parse_graph6
from .graph import Graph, complement, from_edge_list, induced_subgraph, neighborhood
from .oracles import (
    chi_lower_bounds,
    chromatic_number,
    is_k_divisible,
    is_perfect,
    is_perfectly_divisible,
    max_clique,
    max_independent_set,
)
from .ramsey import required_t_scan, search_k4_free, verify_counterexample
from .simplicial import clique_cover_of_set, elimination_order, find_k_simplicial

__version__ = "0.1.0"
