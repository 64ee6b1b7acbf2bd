"""Realizers for containment orders of paths in trees (CPT posets)."""

from .drawings import DrawingDescriptor, DrawingFamily, build_drawing_family, child_order, verify_drawing_family
from .errors import CptError, InvalidTreeError, ParseError, SizeError
from .instances import gen_p12, gen_random_instance
from .oracle import DimensionResult, exact_dimension, p12_lower_bound
from .permutations import (
    Permutation,
    PermutationFamily,
    build_3suitable,
    build_weakly_3suitable,
    close_under_reversal,
    is_3suitable,
    is_weakly_3suitable,
)
from .realizer import (
    CptInstance,
    LinearExtension,
    Poset,
    Realizer,
    build_realizer,
    dimension_bound,
    extension_from_listing,
    poset_from_paths,
    verify_realizer,
)
from .tree import Listing, RootedTree, Tree, TreePath, load_tree, root_at_center

__all__ = [
    "CptError", "CptInstance", "DimensionResult", "DrawingDescriptor", "DrawingFamily",
    "InvalidTreeError", "LinearExtension", "Listing", "ParseError", "Permutation",
    "PermutationFamily", "Poset", "Realizer", "RootedTree", "SizeError", "Tree", "TreePath",
    "build_3suitable", "build_drawing_family", "build_realizer", "build_weakly_3suitable",
    "child_order", "close_under_reversal", "dimension_bound", "exact_dimension",
    "extension_from_listing", "gen_p12", "gen_random_instance", "is_3suitable",
    "is_weakly_3suitable", "load_tree", "p12_lower_bound", "poset_from_paths",
    "root_at_center", "verify_drawing_family", "verify_realizer",
]
