"""Exact zero forcing numbers and the girth/degree bounds that constrain them."""

from .graph import INFINITE, Graph, degree_profile, girth, is_triangle_free
from .forcing import closure, force_step, is_zero_forcing_set
from .solver import ZfResult, ZfTimeout, all_minimum_zfs, zero_forcing_number
from .bounds import BoundReport, evaluate_all
from .corpus import generate, parse_graph6, write_graph6

__all__ = [
    "INFINITE",
    "Graph",
    "degree_profile",
    "girth",
    "is_triangle_free",
    "closure",
    "force_step",
    "is_zero_forcing_set",
    "ZfResult",
    "ZfTimeout",
    "all_minimum_zfs",
    "zero_forcing_number",
    "BoundReport",
    "evaluate_all",
    "generate",
    "parse_graph6",
    "write_graph6",
]
