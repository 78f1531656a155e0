"""Matching complexes of finite simple graphs.

Build the complex of matchings of a graph, compute its reduced homology
over Q or GF(p), and decide purity, strong connectivity, Cohen-Macaulayness,
Gorensteinness, vertex decomposability and shellability. Closed-form
classifiers for several graph families sit in :mod:`matchcx.classify`.
"""

__version__ = "0.1.0"

from .complexes import SimplicialComplex, independence_complex, matching_complex
from .errors import InvalidInputError
from .graphs import Graph, line_graph, make_graph
from .homology import BACKEND, GF, QQ, FieldSpec, reduced_betti

__all__ = [
    "BACKEND",
    "FieldSpec",
    "GF",
    "Graph",
    "InvalidInputError",
    "QQ",
    "SimplicialComplex",
    "independence_complex",
    "line_graph",
    "make_graph",
    "matching_complex",
    "reduced_betti",
]
