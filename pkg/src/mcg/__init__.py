"""
Mapping classes as twist words with exact H1 and π1 evaluation.
"""

from .automorphism import Pi1Automorphism
from .evaluator import Evaluator
from .handle_model import HandleModel
from .homology import (
    apply_matrix,
    determinant,
    identity_matrix,
    intersection_form,
    is_symplectic,
    transvection_matrix,
)
from .mapping_class import Level, MappingClass, Status, Verdict

__all__ = [
    "Pi1Automorphism",
    "Evaluator",
    "HandleModel",
    "apply_matrix",
    "determinant",
    "identity_matrix",
    "intersection_form",
    "is_symplectic",
    "transvection_matrix",
    "Level",
    "MappingClass",
    "Status",
    "Verdict",
]
