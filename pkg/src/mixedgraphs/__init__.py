"""Toolkit for (1,1,k)-mixed graphs: bounds, families, searches, spectra,
Cayley and voltage-lift constructions, and a digraph6 codec."""

from .core import (
    MixedGraph,
    ColoredDigraph,
    DistanceTable,
    GraphError,
    INFINITY,
    build,
)
from .canon import CanonicalForm, canonical_form, automorphism_count, isomorphic

__all__ = [
    "MixedGraph",
    "ColoredDigraph",
    "DistanceTable",
    "GraphError",
    "INFINITY",
    "build",
    "CanonicalForm",
    "canonical_form",
    "automorphism_count",
    "isomorphic",
]

__version__ = "0.1.0"
