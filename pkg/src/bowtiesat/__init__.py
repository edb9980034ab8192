"""Exact search and verification tools for bow-tie saturation of k-uniform hypergraphs."""

from .hypercore import Hypergraph, parse_hypergraph
from .saturation import check, closed_form, is_saturated, is_semi_saturated

__version__ = "0.1.0"

__all__ = ["Hypergraph", "parse_hypergraph", "check", "closed_form", "is_saturated", "is_semi_saturated"]
