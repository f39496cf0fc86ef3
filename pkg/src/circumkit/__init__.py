"""Exact circumference tools: graph core, solvers, extremal families,
classification against the clique/minimum-degree circumference bounds,
and exhaustive small-order sweeps."""

from .graph import Graph
from .graph6 import decode, encode

__all__ = ["Graph", "decode", "encode"]
