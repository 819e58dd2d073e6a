"""Affine equivalence of point sets in F_2^n through Venn regions of even zero-sum spaces."""

from .caps import (
    CapTemplate,
    Diff3Class,
    builtin_templates,
    construct_diff3_cap,
    diff3_classes,
    find_quad,
    get_template,
    instantiate_template,
    is_cap,
)
from .equivalence import (
    EquivalenceWitness,
    brute_force_equivalent,
    equivalence_verdict,
    equivalent_diff3,
    find_witness,
    reconstruct_affine_map,
    validate_witness_matrix,
    venn_equivalent,
)
from .gf2 import AffineMap, Gf2Vector, PointSet, affine_decompose, apply_map, dimension
from .matrix import Gf2Matrix
from .venn import VennDiagram, change_of_coordinates, venn_diagram, zmap
from .zerosum import ZeroSumSpace, build_zero_sum_space, enumerate_even_zero_sums, is_even_zero_sum

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "CapTemplate",
    "Diff3Class",
    "EquivalenceWitness",
    "Gf2Matrix",
    "Gf2Vector",
    "PointSet",
    "VennDiagram",
    "ZeroSumSpace",
    "affine_decompose",
    "apply_map",
    "brute_force_equivalent",
    "build_zero_sum_space",
    "builtin_templates",
    "change_of_coordinates",
    "construct_diff3_cap",
    "diff3_classes",
    "dimension",
    "enumerate_even_zero_sums",
    "equivalence_verdict",
    "equivalent_diff3",
    "find_quad",
    "find_witness",
    "get_template",
    "instantiate_template",
    "is_cap",
    "is_even_zero_sum",
    "reconstruct_affine_map",
    "validate_witness_matrix",
    "venn_diagram",
    "venn_equivalent",
    "zmap",
]
