"""
Coset enumeration through sympy's fp-group machinery.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from sympy.combinatorics.fp_groups import coset_enumeration_r

from errors import PresentationError

from .presentation import Presentation


logger = logging.getLogger(__name__)

FINITE_ORDER = "FiniteOrder"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class EnumerationResult:
    """FiniteOrder(k) with a complete coset table, or Inconclusive on overflow."""

    status: str
    order: Optional[int] = None
    max_cosets: int = 0
    reason: str = ""

    @property
    def finite(self) -> bool:
        return self.status == FINITE_ORDER

    def to_dict(self) -> dict:
        return {"status": self.status, "order": self.order, "max_cosets": self.max_cosets, "reason": self.reason}


def todd_coxeter(p: Presentation, max_cosets: int = 100_000) -> EnumerationResult:
    """
    Enumerate the cosets of the trivial subgroup with the HLT strategy.

    Args:
        p: presentation
        max_cosets: coset table limit

    Returns:
        FiniteOrder(|G|) or Inconclusive when the table overflows
    """
    if max_cosets < 1:
        raise PresentationError(f"max_cosets must be positive, got {max_cosets}")
    if not p.generators:
        return EnumerationResult(FINITE_ORDER, 1, max_cosets)
    group, _ = p.to_sympy()
    try:
        table = coset_enumeration_r(group, [], max_cosets=max_cosets)
    except ValueError as e:
        logger.warning(f"Coset enumeration abandoned: {e}")
        return EnumerationResult(INCONCLUSIVE, None, max_cosets, str(e))
    order = len(table.omega)
    logger.info(f"Coset enumeration over {p.rank} generators: order {order}")
    return EnumerationResult(FINITE_ORDER, order, max_cosets)

