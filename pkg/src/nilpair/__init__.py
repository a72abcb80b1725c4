"""Exact-arithmetic workbench for commuting nilpotent matrix pairs built
from box diagrams."""

from .diagrams import Diagram, ShapeClass, classify_shape, enumerate_diagrams, parse
from .linalg import Matrix, Subspace
from .pairs import NilPair, SemisimplePair, build_pair, centralizer, classify_pair

__all__ = [
    "Diagram",
    "ShapeClass",
    "classify_shape",
    "enumerate_diagrams",
    "parse",
    "Matrix",
    "Subspace",
    "NilPair",
    "SemisimplePair",
    "build_pair",
    "centralizer",
    "classify_pair",
]
