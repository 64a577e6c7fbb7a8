"""
Mapping classes as words in Dehn twists.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

from errors import CatalogError
from surface import CurveCatalog, CurveSpec, SurfaceKind


class Level(str, Enum):
    """Evaluation tiers: L1 acts on homology, L2 on the free fundamental group."""

    L1 = "L1"
    L2 = "L2"


class Status(str, Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an identity test at the level that decided it."""

    status: Status
    level: Level
    reason: str = ""

    @property
    def verified(self) -> bool:
        return self.status == Status.VERIFIED

    @property
    def refuted(self) -> bool:
        return self.status == Status.REFUTED

    def to_dict(self) -> dict:
        return {"status": self.status.value, "level": self.level.value, "reason": self.reason}


@dataclass(frozen=True)
class MappingClass:
    """
    Product of twists ``t_{c_1}^{e_1} ⋯ t_{c_k}^{e_k}``.

    The rightmost twist acts first, so the product φ1·φ2 applies φ2 then φ1.
    """

    surface: SurfaceKind
    twists: Tuple[Tuple[CurveSpec, int], ...] = ()

    def __post_init__(self):
        cleaned = tuple((curve, int(exponent)) for curve, exponent in self.twists if exponent)
        object.__setattr__(self, "twists", cleaned)
        for curve, _ in cleaned:
            if curve.surface != self.surface:
                raise CatalogError(f"curve {curve.name} lives on {curve.surface}, not {self.surface}")

    @classmethod
    def identity(cls, surface: SurfaceKind) -> "MappingClass":
        return cls(surface, ())

    @classmethod
    def from_names(cls, catalog: CurveCatalog,
                   items: Iterable[Union[str, Tuple[str, int], Tuple[CurveSpec, int], CurveSpec]]) -> "MappingClass":
        """Build from catalog names, ``(name, exponent)`` pairs or curves; a bare entry means exponent 1."""
        twists: List[Tuple[CurveSpec, int]] = []
        for item in items:
            if isinstance(item, tuple):
                ref, exponent = item
            else:
                ref, exponent = item, 1
            curve = ref if isinstance(ref, CurveSpec) else catalog.get(ref)
            twists.append((curve, exponent))
        return cls(catalog.surface, tuple(twists))

    @classmethod
    def positive(cls, surface: SurfaceKind, curves: Sequence[CurveSpec]) -> "MappingClass":
        return cls(surface, tuple((curve, 1) for curve in curves))

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        if other.surface != self.surface:
            raise CatalogError("cannot multiply mapping classes on different surfaces")
        return MappingClass(self.surface, self.twists + other.twists)

    def __pow__(self, n: int) -> "MappingClass":
        base = self if n >= 0 else self.inverse()
        return MappingClass(self.surface, base.twists * abs(n))

    def __len__(self) -> int:
        return len(self.twists)

    def inverse(self) -> "MappingClass":
        return MappingClass(self.surface, tuple((curve, -exponent) for curve, exponent in reversed(self.twists)))

    def reduced(self) -> "MappingClass":
        """Merge adjacent twists along the same curve and drop zero exponents."""
        stack: List[Tuple[CurveSpec, int]] = []
        for curve, exponent in self.twists:
            if stack and stack[-1][0] == curve:
                merged = stack[-1][1] + exponent
                stack.pop()
                if merged:
                    stack.append((curve, merged))
            else:
                stack.append((curve, exponent))
        return MappingClass(self.surface, tuple(stack))

    def is_empty(self) -> bool:
        return not self.twists

    @property
    def letter_count(self) -> int:
        return sum(abs(exponent) for _, exponent in self.twists)

    def describe(self) -> str:
        if not self.twists:
            return "1"
        parts = []
        for curve, exponent in self.twists:
            parts.append(f"t_{curve.name}" if exponent == 1 else f"t_{curve.name}^{exponent}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.describe()

    def to_list(self) -> List[dict]:
        return [{"curve": curve.name, "exponent": exponent} for curve, exponent in self.twists]
