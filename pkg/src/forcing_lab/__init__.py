"""Zero forcing and total forcing numbers of claw-free cubic graphs."""

from __future__ import annotations

from .builders import TFCertificate, tfset_clawfree, tfset_triangle_factor
from .codecs import from_graph6, to_graph6
from .forcing import forcing_closure, is_forcing_set, is_total_forcing_set
from .graph import Multigraph, SimpleGraph, VertexSet
from .solver import SolveResult, forcing_number, total_forcing_number

__version__ = "0.1.0"

__all__ = [
    "Multigraph",
    "SimpleGraph",
    "SolveResult",
    "TFCertificate",
    "VertexSet",
    "forcing_closure",
    "forcing_number",
    "from_graph6",
    "is_forcing_set",
    "is_total_forcing_set",
    "tfset_clawfree",
    "tfset_triangle_factor",
    "to_graph6",
    "total_forcing_number",
]
