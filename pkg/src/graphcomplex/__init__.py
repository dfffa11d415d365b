"""Kontsevich-style graph complexes and their action on polyvector fields."""

from .graphs import DirectedGraph, UndirectedGraph, canonicalize, degree
from .vectors import GraphVector
from .lie import MC_DIRECTED, MC_UNDIRECTED, bracket, differential, pre_lie
from .polyvector import Polyvector, schouten
from .action import theta_action

__all__ = [
    "DirectedGraph",
    "UndirectedGraph",
    "canonicalize",
    "degree",
    "GraphVector",
    "MC_DIRECTED",
    "MC_UNDIRECTED",
    "bracket",
    "differential",
    "pre_lie",
    "Polyvector",
    "schouten",
    "theta_action",
]
__version__ = "0.1.0"
