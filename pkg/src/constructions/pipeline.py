"""
Stage bookkeeping for the constructions: every intermediate factorization
passes an L1 invariance gate before the next stage starts.
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from errors import PipelineError
from factorization import Factorization, MoveEngine
from mcg import Evaluator, Level, MappingClass, Verdict
from relators import Relator


@dataclass(frozen=True)
class StageRecord:
    """One gated pipeline stage."""

    name: str
    cycles: int
    verdict: Verdict
    timestamp: datetime
    duration: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "cycles": self.cycles,
            "verdict": self.verdict.to_dict(),
        }


@dataclass(frozen=True)
class TrivialityWitness:
    """
    Cycles ρ(A_1), …, ρ(A_2g) found in a factorization.

    Their presence makes π1 of the total space a quotient of
    ⟨a, b | c_g, A_1, …, A_2g⟩.
    """

    rho: MappingClass
    curves: tuple
    positions: tuple

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rho": self.rho.to_list(),
            "curves": [curve.name for curve in self.curves],
            "positions": list(self.positions),
        }


@dataclass
class PipelineReport:
    """
    Output of a construction: the closed factorization, its bordered lift,
    the closed base relator the signature ledger starts from, and every
    gated intermediate.
    """

    theorem: str
    genus: int
    final: Factorization
    lift: Factorization
    base: Factorization
    n: Optional[int] = None
    intermediates: Dict[str, Factorization] = field(default_factory=dict)
    stages: List[StageRecord] = field(default_factory=list)
    relators: Dict[str, Relator] = field(default_factory=dict)
    witness: Optional[TrivialityWitness] = None
    reduction: List[Any] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        """The weakest stage verdict (Refuted never reaches a report)."""
        for stage in self.stages:
            if not stage.verdict.verified:
                return stage.verdict
        return self.stages[-1].verdict

    @property
    def inconclusive(self) -> bool:
        return any(not stage.verdict.verified for stage in self.stages)


class StageRunner:
    """
    Runs the gates between construction stages and keeps their records.

    A stage passes when its factorization has the same H1 product as its
    predecessor and its bordered lift still equals the boundary twists.
    """

    def __init__(self, evaluator: Evaluator, engine: MoveEngine, config: Optional[Dict[str, Any]] = None):
        config = config or {}
        self.evaluator = evaluator
        self.engine = engine
        self.keep_intermediates = config.get("keep_intermediates", True)
        self.lift_level = Level(config.get("lift_level", "L1"))
        self.logger = logging.getLogger(self.__class__.__name__)

        self.stages: List[StageRecord] = []
        self.intermediates: Dict[str, Factorization] = {}
        self.relators: Dict[str, Relator] = {}

    def expose(self, relator: Relator) -> Relator:
        """Record and L1-verify a relator used by the construction."""
        relator.verify(self.evaluator, Level.L1)
        self.relators[relator.label] = relator
        return relator

    def gate(self, name: str, current: Factorization, previous: Optional[Factorization] = None) -> Factorization:
        """
        Check a stage and record it.

        Raises:
            PipelineError: product changed at L1, or the lift is refuted
        """
        start_time = datetime.now()
        if previous is not None and previous.surface == current.surface:
            if not self.engine.same_product(previous, current):
                self.logger.error(f"Stage {name}: product differs from the previous stage")
                raise PipelineError(name, "product changed at L1")
        level = self.lift_level if not current.surface.is_closed else Level.L1
        verdict = self.engine.check_lift(current, level)
        if verdict.refuted:
            self.logger.error(f"Stage {name}: {verdict.reason}")
            raise PipelineError(name, f"lift refuted at {verdict.level.value}: {verdict.reason}")

        record = StageRecord(
            name=name,
            cycles=len(current),
            verdict=verdict,
            timestamp=start_time,
            duration=(datetime.now() - start_time).total_seconds(),
        )
        self.stages.append(record)
        if self.keep_intermediates:
            self.intermediates[name] = current
        self.logger.info(f"Stage {name}: {len(current)} cycles, {verdict.status.value} at {verdict.level.value}")
        return current

    def report(self, theorem: str, genus: int, final: Factorization, lift: Factorization, base: Factorization,
               n: Optional[int] = None, witness: Optional[TrivialityWitness] = None,
               reduction: Optional[List[Any]] = None) -> PipelineReport:
        return PipelineReport(
            theorem=theorem,
            genus=genus,
            n=n,
            final=final,
            lift=lift,
            base=base,
            intermediates=dict(self.intermediates),
            stages=list(self.stages),
            relators=dict(self.relators),
            witness=witness,
            reduction=list(reduction or []),
        )
