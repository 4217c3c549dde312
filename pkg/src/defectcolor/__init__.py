"""Defective list coloring of plane graphs without 4-cycles adjacent to 3- or 4-cycles."""

from .coloring import check, is_choosable, solve
from .errors import DefectColorError
from .kernels import BACKEND
from .plane_graph import PlaneGraph, build_from_rotation, loads, read_graph
from .structure import classify, girth, in_class

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DefectColorError",
    "PlaneGraph",
    "build_from_rotation",
    "check",
    "classify",
    "girth",
    "in_class",
    "is_choosable",
    "loads",
    "read_graph",
    "solve",
]
