"""Star edge-coloring of subcubic multigraphs from 7-color lists."""

from .colorer import star_edge_color_list
from .errors import InputError, InternalInvariantError
from .multigraph import Multigraph
from .oracle import exhaustive_star_color, named_graph, star_chromatic_index
from .verifier import Violation, find_violation, find_violation_partial, respects_lists

__all__ = [
    "InputError",
    "InternalInvariantError",
    "Multigraph",
    "Violation",
    "exhaustive_star_color",
    "find_violation",
    "find_violation_partial",
    "named_graph",
    "respects_lists",
    "star_chromatic_index",
    "star_edge_color_list",
]
