"""
Abelianization through the Smith normal form of the relation matrix, and
certificates for maps onto finitely generated abelian groups.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sympy import ZZ, Matrix, eye, zeros
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

from errors import PresentationError

from .presentation import Presentation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank ⊕ Z_{d_1} ⊕ ⋯ with d_1 | d_2 | ⋯ and every d_i > 1."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def is_z_plus_cyclic(self) -> bool:
        """True for Z ⊕ Z_n (n ≥ 1)."""
        return self.free_rank == 1 and len(self.torsion) <= 1

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def relation_matrix(p: Presentation) -> Matrix:
    """Exponent sums: one row per relator, one column per generator."""
    rows = []
    for word in p.relators:
        row = [0] * p.rank
        for index, sign in word.letters:
            row[index] += sign
        rows.append(row)
    if not rows:
        return zeros(0, p.rank)
    return Matrix(rows)


def smith_form(m: Matrix) -> Tuple[List[int], Matrix]:
    """
    Smith normal form S·M·T = D over the integers.

    Returns:
        the diagonal of D (length min(rows, cols), nonnegative) and the
        column transform T; row j of T is the image of generator j
    """
    if m.rows == 0 or m.cols == 0:
        return [], eye(m.cols)
    d, _, t = smith_normal_decomp(DomainMatrix.from_Matrix(m).convert_to(ZZ))
    d = d.to_Matrix()
    diagonal = [abs(int(d[k, k])) for k in range(min(m.rows, m.cols))]
    return diagonal, t.to_Matrix()


def abelianization(p: Presentation) -> AbelianInvariants:
    """H1 of the presented group."""
    if not p.generators:
        return AbelianInvariants(0)
    m = relation_matrix(p)
    factors = [abs(int(d)) for d in invariant_factors(DomainMatrix.from_Matrix(m).convert_to(ZZ))] if m.rows else []
    rank = sum(1 for value in factors if value)
    torsion = tuple(value for value in factors if value > 1)
    result = AbelianInvariants(p.rank - rank, torsion)
    logger.debug(f"Abelianization of {p.rank} generators, {len(p.relators)} relators: {result.describe()}")
    return result


def quotient_images(p: Presentation) -> Tuple[AbelianInvariants, Dict[str, Tuple[int, ...]]]:
    """
    Images of the generators under an explicit surjection onto H1.

    Coordinates are ordered free part first, then one per torsion factor;
    they come from the rows of the Smith transform T.
    """
    if not p.generators:
        return AbelianInvariants(0), {}
    diagonal, t = smith_form(relation_matrix(p))
    diagonal = diagonal + [0] * (p.rank - len(diagonal))
    free_columns = [k for k in range(p.rank) if diagonal[k] == 0]
    torsion_columns = [k for k in range(p.rank) if diagonal[k] > 1]
    invariants = AbelianInvariants(len(free_columns), tuple(diagonal[k] for k in torsion_columns))
    images = {}
    for j, name in enumerate(p.generators):
        free = tuple(int(t[j, k]) for k in free_columns)
        torsion = tuple(int(t[j, k]) % diagonal[k] for k in torsion_columns)
        images[name] = free + torsion
    return invariants, images


def _image_of(word, images: Dict[str, Sequence[int]], width: int) -> List[int]:
    total = [0] * width
    for index, sign in word.letters:
        vector = images[word.alphabet.names[index]]
        for k in range(width):
            total[k] += sign * vector[k]
    return total


def verify_quotient_map(p: Presentation, target: AbelianInvariants, images: Dict[str, Sequence[int]]) -> bool:
    """
    True iff every relator maps to zero in Z^r ⊕ Z_{d_1} ⊕ ⋯ under ``images``.

    Raises:
        PresentationError: an image is missing or has the wrong length
    """
    width = target.free_rank + len(target.torsion)
    for name in p.generators:
        if name not in images:
            raise PresentationError(f"no image for generator {name}")
        if len(images[name]) != width:
            raise PresentationError(f"image of {name} has {len(images[name])} coordinates, expected {width}")
    for word in p.relators:
        value = _image_of(word, images, width)
        if any(value[k] for k in range(target.free_rank)):
            return False
        for offset, d in enumerate(target.torsion):
            if value[target.free_rank + offset] % d:
                return False
    return True


def is_surjective(target: AbelianInvariants, images: Dict[str, Sequence[int]]) -> bool:
    """Whether the images generate Z^r ⊕ ⊕Z_{d_i} (checked through a Smith form of the image lattice)."""
    width = target.free_rank + len(target.torsion)
    if width == 0:
        return True
    rows = [list(vector) for vector in images.values()]
    # relations of the target enlarge the lattice
    for offset, d in enumerate(target.torsion):
        row = [0] * width
        row[target.free_rank + offset] = d
        rows.append(row)
    if len(rows) < width:
        return False
    diagonal, _ = smith_form(Matrix(rows))
    return all(value == 1 for value in diagonal[:width])
