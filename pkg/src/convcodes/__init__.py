"""Convolutional codes over small finite fields: bounds, distances, cyclic structure."""

from .bounds import bounds_report, griesmer_conv, heller, mds_min_field, singleton_generalized
from .code import CodeProfile, profile, puncture
from .gf import FieldElement, FieldSpec, construct_field, field_of_order
from .metrics import Budget, BudgetExceeded, column_distances, distance_report, free_distance, weight_spectrum
from .polymat import Poly, PolyMatrix, format_matrix, parse_matrix, right_inverse
from .skew import Algebra, Automorphism, SkewPoly, enumerate_automorphisms, ideal_generator_matrix, is_sigma_cyclic

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Automorphism",
    "Budget",
    "BudgetExceeded",
    "CodeProfile",
    "FieldElement",
    "FieldSpec",
    "Poly",
    "PolyMatrix",
    "SkewPoly",
    "bounds_report",
    "column_distances",
    "construct_field",
    "distance_report",
    "enumerate_automorphisms",
    "field_of_order",
    "format_matrix",
    "free_distance",
    "griesmer_conv",
    "heller",
    "ideal_generator_matrix",
    "is_sigma_cyclic",
    "mds_min_field",
    "parse_matrix",
    "profile",
    "puncture",
    "right_inverse",
    "singleton_generalized",
    "weight_spectrum",
]
