"""
Relator value type: a twist word v_1⋯v_k · t_{d_l}⁻¹⋯t_{d_1}⁻¹ equal to the identity.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from errors import RelatorError
from mcg import Evaluator, Level, MappingClass, Verdict
from surface import CurveSpec, SurfaceKind


logger = logging.getLogger(__name__)

BRAID = "Braid"
LANTERN = "Lantern"
CHAIN_EVEN = "ChainEven"
CHAIN_ODD = "ChainOdd"
W_RELATOR = "W"
MCK = "MCK"
DERIVED = "Derived"


@dataclass(frozen=True)
class Relator:
    """
    A relator read as the relation ``t_{v_1}⋯t_{v_k} = t_{d_1}⋯t_{d_l}``.

    ``positive`` holds v_1..v_k and ``negative`` holds d_1..d_l; the word
    itself is t_{v_1}⋯t_{v_k} t_{d_l}⁻¹⋯t_{d_1}⁻¹. ``sigma_delta`` is the
    signature change of a substitution by this relator, None when the
    relator carries no signature bookkeeping.
    """

    kind: str
    surface: SurfaceKind
    positive: Tuple[CurveSpec, ...]
    negative: Tuple[CurveSpec, ...] = ()
    tag: str = ""
    h: Optional[int] = None
    sigma_delta: Optional[int] = None
    inverted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "positive", tuple(self.positive))
        object.__setattr__(self, "negative", tuple(self.negative))

    @property
    def word(self) -> MappingClass:
        return MappingClass.positive(self.surface, self.positive) * MappingClass.positive(
            self.surface, self.negative
        ).inverse()

    @property
    def label(self) -> str:
        base = self.tag or self.kind
        return f"{base}^-1" if self.inverted else base

    @property
    def cycle_delta(self) -> int:
        """Change in cycle count when this relator is substituted (d's out, v's in)."""
        return len(self.positive) - len(self.negative)

    @property
    def is_positive(self) -> bool:
        return not self.negative

    def inverse(self) -> "Relator":
        """R⁻¹ = t_{d_1}⋯t_{d_l} t_{v_k}⁻¹⋯t_{v_1}⁻¹: the roles of v and d swap."""
        sigma = None if self.sigma_delta is None else -self.sigma_delta
        return replace(
            self,
            positive=self.negative,
            negative=self.positive,
            sigma_delta=sigma,
            inverted=not self.inverted,
        )

    def verify(self, evaluator: Evaluator, level: Level = Level.L2) -> Verdict:
        """
        Check that the word is the identity; a Refuted verdict is a construction bug.

        Raises:
            RelatorError: when the word acts nontrivially
        """
        verdict = evaluator.is_identity(self.word, level)
        if verdict.refuted:
            logger.error(f"Relator {self.label} refuted at {verdict.level.value}: {verdict.reason}")
            raise RelatorError(f"relator {self.label} is not the identity ({verdict.reason})")
        logger.debug(f"Relator {self.label}: {verdict.status.value} at {verdict.level.value}")
        return verdict

    def describe(self) -> str:
        return self.word.describe()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "tag": self.label,
            "positive": [curve.name for curve in self.positive],
            "negative": [curve.name for curve in self.negative],
            "sigma_delta": self.sigma_delta,
        }
