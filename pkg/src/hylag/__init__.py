"""Hypergraph Lagrangians, the layered 5-uniform constructions, and a
numerical verifier for the inequalities behind their non-jump values."""

from .hypergraph import Hypergraph, InvalidInput

__version__ = "0.1.0"

__all__ = ["Hypergraph", "InvalidInput", "__version__"]
