"""
Positive factorizations and the move trace that certifies how they were built.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

from errors import MoveError
from mcg import MappingClass
from surface import CurveSpec, SurfaceKind, catalog_for


@dataclass(frozen=True)
class MoveRecord:
    """One applied move; signature and cycle-count deltas feed the ledgers."""

    kind: str
    position: int
    relator: Optional[str] = None
    phi: Optional[str] = None
    sigma_delta: Optional[int] = 0
    cycle_delta: int = 0
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "kind": self.kind,
            "position": self.position,
            "relator": self.relator,
            "phi": self.phi,
            "sigma_delta": self.sigma_delta,
            "cycle_delta": self.cycle_delta,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MoveRecord":
        return cls(
            kind=data["kind"],
            position=int(data["position"]),
            relator=data.get("relator"),
            phi=data.get("phi"),
            sigma_delta=None if data.get("sigma_delta", 0) is None else int(data.get("sigma_delta", 0)),
            cycle_delta=int(data.get("cycle_delta", 0)),
            detail=data.get("detail", ""),
        )


@dataclass(frozen=True)
class Factorization:
    """
    Ordered positive Dehn twist factorization t_{v_1}⋯t_{v_n}.

    On a bordered surface the product equals ∏ t_δ^k over the boundary
    components with ``boundary_exponents`` k. Component 0 is a_{g+1};
    on two-boundary surfaces component 1 is a'_{g+1}.
    """

    surface: SurfaceKind
    cycles: Tuple[CurveSpec, ...]
    boundary_exponents: Tuple[int, ...] = ()
    trace: Tuple[MoveRecord, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        object.__setattr__(self, "boundary_exponents", tuple(int(k) for k in self.boundary_exponents))
        object.__setattr__(self, "trace", tuple(self.trace))
        # closed surfaces keep the exponents of the bordered lift for section counting
        bordered = self.surface.boundary_count
        if bordered and len(self.boundary_exponents) not in (0, bordered):
            raise MoveError(
                f"{len(self.boundary_exponents)} boundary exponents for a surface with {bordered} boundary components"
            )
        for curve in self.cycles:
            if curve.surface != self.surface:
                raise MoveError(f"cycle {curve.name} lives on {curve.surface}, not {self.surface}")

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def names(self) -> List[str]:
        return [curve.name for curve in self.cycles]

    def product(self) -> MappingClass:
        return MappingClass.positive(self.surface, self.cycles)

    def boundary_curves(self) -> List[CurveSpec]:
        """The boundary curves in component order (empty on closed surfaces)."""
        g = self.surface.genus
        catalog = catalog_for(self.surface)
        if self.surface.boundary_count == 0:
            return []
        if self.surface.boundary_count == 1:
            return [catalog.get(f"a{g + 1}")]
        return [catalog.get(f"a{g + 1}"), catalog.get(f"a{g + 1}'")]

    def boundary_product(self) -> MappingClass:
        twists = []
        for curve, k in zip(self.boundary_curves(), self.boundary_exponents):
            if k:
                twists.append((curve, k))
        return MappingClass(self.surface, tuple(twists))

    def relator_word(self) -> MappingClass:
        """The word product · ∏ t_δ^{-k}, which is the identity for a valid lift."""
        return self.product() * self.boundary_product().inverse()

    @property
    def sigma_delta_total(self) -> Optional[int]:
        """Net signature change over the trace; None once any move has no known delta."""
        deltas = [move.sigma_delta for move in self.trace]
        if any(delta is None for delta in deltas):
            return None
        return sum(deltas)

    @property
    def cycle_delta_total(self) -> int:
        return sum(move.cycle_delta for move in self.trace)

    def with_cycles(self, cycles, move: MoveRecord) -> "Factorization":
        return replace(self, cycles=tuple(cycles), trace=self.trace + (move,))

    def without_trace(self) -> "Factorization":
        return replace(self, trace=())

    def slice(self, start: int, stop: int) -> Tuple[CurveSpec, ...]:
        return self.cycles[start:stop]

    def describe(self) -> str:
        return " ".join(f"t_{name}" for name in self.names)
