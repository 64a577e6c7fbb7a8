"""
Staged quotients of a surface group: each stage adds a batch of relators,
is Tietze-simplified and has its abelianization compared with the claim.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from words import Word

from .abelian import AbelianInvariants, abelianization
from .presentation import Presentation
from .tietze import tietze_simplify


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionStage:
    """One quotient in the chain, with its simplified presentation and H1."""

    name: str
    added: int
    presentation: Presentation
    simplified: Presentation
    invariants: AbelianInvariants
    expected: AbelianInvariants

    @property
    def matches(self) -> bool:
        return self.invariants == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "added_relators": self.added,
            "generators": list(self.simplified.generators),
            "relators": [word.to_text() for word in self.simplified.relators],
            "h1": self.invariants.describe(),
            "expected": self.expected.describe(),
            "matches": self.matches,
        }


def staged_reduction(base: Presentation,
                     stages: Sequence[Tuple[str, Sequence[Word], AbelianInvariants]]) -> List[ReductionStage]:
    """
    Quotient ``base`` by each batch of relators in turn.

    Every stage keeps all earlier relators; simplification runs on the
    accumulated presentation so the relator words stay over the original
    generators.
    """
    current = base
    results = []
    for name, words, expected in stages:
        current = current.with_relators(words)
        simplified = tietze_simplify(current)
        invariants = abelianization(current)
        stage = ReductionStage(name, len(words), current, simplified, invariants, expected)
        if stage.matches:
            logger.info(f"Stage {name}: {simplified.rank} generators, H1 = {invariants.describe()}")
        else:
            logger.warning(f"Stage {name}: H1 = {invariants.describe()}, expected {expected.describe()}")
        results.append(stage)
    return results
