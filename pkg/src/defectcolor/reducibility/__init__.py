"""Reducible configurations: detection, reduction and constructive extension."""

from .configs import KINDS, Configuration, find_all, find_first, verify_witness
from .extend import extend, reduce, star
from .recursive import RecursionReport, recursive_color

__all__ = [
    "KINDS",
    "Configuration",
    "RecursionReport",
    "extend",
    "find_all",
    "find_first",
    "recursive_color",
    "reduce",
    "star",
    "verify_witness",
]
