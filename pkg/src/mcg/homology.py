"""
H1 action of Dehn twists as exact integer matrices.
"""

import numpy as np
import sympy

from surface import HomologyClass, SurfaceKind


def identity_matrix(surface: SurfaceKind) -> np.ndarray:
    n = surface.dimension
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def intersection_form(surface: SurfaceKind) -> np.ndarray:
    """Gram matrix Ω with ⟨x, y⟩ = xᵀ Ω y."""
    n = surface.dimension
    omega = np.zeros((n, n), dtype=object)
    for j in range(surface.genus):
        omega[2 * j, 2 * j + 1] = 1
        omega[2 * j + 1, 2 * j] = -1
    return omega


def transvection_matrix(c: HomologyClass, exponent: int = 1) -> np.ndarray:
    """
    Matrix of t_c^exponent on H1.

    A right-handed twist acts by x ↦ x − ⟨x, c⟩ c, so b1 ↦ b1 + a1 for c = a1.

    Args:
        c: homology class of the twist curve (orientation irrelevant)
        exponent: twist power

    Returns:
        Square object-dtype integer matrix acting on column vectors
    """
    surface = c.surface
    vec = np.array(c.coords, dtype=object).reshape(-1, 1)
    row = (intersection_form(surface) @ vec).reshape(1, -1)
    return identity_matrix(surface) - exponent * (vec @ row)


def apply_matrix(matrix: np.ndarray, x: HomologyClass) -> HomologyClass:
    vec = np.array(x.coords, dtype=object)
    return HomologyClass(x.surface, tuple(int(v) for v in matrix @ vec))


def is_symplectic(matrix: np.ndarray, surface: SurfaceKind) -> bool:
    omega = intersection_form(surface)
    return bool(np.array_equal(matrix.T @ omega @ matrix, omega))


def matrices_equal(left: np.ndarray, right: np.ndarray) -> bool:
    return bool(np.array_equal(left, right))


def determinant(matrix: np.ndarray) -> int:
    return int(sympy.Matrix(matrix.tolist()).det())
