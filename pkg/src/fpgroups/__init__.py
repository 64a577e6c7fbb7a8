"""
Finitely presented groups: presentations, abelianization, coset enumeration.
"""

from .presentation import Presentation, parse_presentation, surface_presentation
from .abelian import (
    AbelianInvariants,
    abelianization,
    is_surjective,
    quotient_images,
    relation_matrix,
    smith_form,
    verify_quotient_map,
)
from .enumeration import FINITE_ORDER, INCONCLUSIVE, EnumerationResult, todd_coxeter
from .tietze import eliminate_generator, normalize, tietze_simplify
from .reduction import ReductionStage, staged_reduction
from .pi1 import homology_presentation, normalized_images, pi1_total_space, quotient_certificate

__all__ = [
    "Presentation",
    "parse_presentation",
    "surface_presentation",
    "AbelianInvariants",
    "abelianization",
    "is_surjective",
    "quotient_images",
    "relation_matrix",
    "smith_form",
    "verify_quotient_map",
    "FINITE_ORDER",
    "INCONCLUSIVE",
    "EnumerationResult",
    "todd_coxeter",
    "eliminate_generator",
    "normalize",
    "tietze_simplify",
    "ReductionStage",
    "staged_reduction",
    "homology_presentation",
    "normalized_images",
    "pi1_total_space",
    "quotient_certificate",
]
