"""Exact Harary and Wiener indices of trees and exhaustive checks of their extremal trees."""

__version__ = "0.1.0"

from .errors import HararyError
from .families import FamilySpec, make_family
from .indices import FormulaId, closed_form, harary_index, harmonic, wiener_index
from .trees import (
    Tree,
    build_tree,
    canonical_code,
    degree_profile,
    distances,
    independence_number,
    is_isomorphic,
    matching_number,
    metric_profile,
)

__all__ = [
    "FamilySpec", "FormulaId", "HararyError", "Tree", "build_tree", "canonical_code",
    "closed_form", "degree_profile", "distances", "harary_index", "harmonic",
    "independence_number", "is_isomorphic", "make_family", "matching_number",
    "metric_profile", "wiener_index",
]
