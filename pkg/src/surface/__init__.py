"""
Surface presentations, homology and the named curve catalog.
"""

from .model import SurfaceKind, HomologyClass, homology_of, intersection
from .catalog import (
    CHAIN_INVOLUTION,
    B_CURVE_INVOLUTION,
    CurveSpec,
    CurveCatalog,
    Realization,
    a_word,
    b_curve_words,
    boundary_word,
    build_catalog,
    c_word,
    catalog_for,
    image_curve,
    project_to_closed,
    standard_curve,
)

__all__ = [
    "SurfaceKind",
    "HomologyClass",
    "homology_of",
    "intersection",
    "CHAIN_INVOLUTION",
    "B_CURVE_INVOLUTION",
    "CurveSpec",
    "CurveCatalog",
    "Realization",
    "a_word",
    "b_curve_words",
    "boundary_word",
    "build_catalog",
    "c_word",
    "catalog_for",
    "image_curve",
    "project_to_closed",
    "standard_curve",
]
