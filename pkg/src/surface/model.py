"""
Surface presentations and integral homology with the intersection pairing.
"""

from dataclasses import dataclass
from typing import Tuple

from errors import AlphabetError, CatalogError
from words import Alphabet, Word


@dataclass(frozen=True)
class SurfaceKind:
    """Genus ``g`` surface with ``boundary_count`` boundary components (0, 1 or 2)."""

    genus: int
    boundary_count: int = 1

    def __post_init__(self):
        if self.genus < 1:
            raise CatalogError(f"genus must be at least 1, got {self.genus}")
        if self.boundary_count not in (0, 1, 2):
            raise CatalogError(f"boundary_count must be 0, 1 or 2, got {self.boundary_count}")

    @property
    def rank(self) -> int:
        """Free rank of π1 for bordered surfaces (number of generators in every case)."""
        return 2 * self.genus + max(self.boundary_count - 1, 0)

    @property
    def dimension(self) -> int:
        return self.rank

    @property
    def alphabet(self) -> Alphabet:
        names = []
        for j in range(1, self.genus + 1):
            names.extend([f"a{j}", f"b{j}"])
        if self.boundary_count == 2:
            names.append("d2")
        return Alphabet(tuple(names))

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    def closed(self) -> "SurfaceKind":
        return SurfaceKind(self.genus, 0)

    def generator(self, name: str) -> Word:
        alphabet = self.alphabet
        return Word(alphabet, (alphabet.letter(name),))

    def a(self, j: int) -> Word:
        return self.generator(f"a{j}")

    def b(self, j: int) -> Word:
        return self.generator(f"b{j}")

    def to_dict(self) -> dict:
        return {"genus": self.genus, "boundary": self.boundary_count}

    @classmethod
    def from_dict(cls, data: dict) -> "SurfaceKind":
        return cls(int(data["genus"]), int(data["boundary"]))


@dataclass(frozen=True)
class HomologyClass:
    """Integer coordinates over the basis a1, b1, ..., ag, bg (, d2)."""

    surface: SurfaceKind
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.surface.dimension:
            raise AlphabetError(
                f"homology vector of length {len(self.coords)} on a surface of dimension {self.surface.dimension}"
            )

    @classmethod
    def zero(cls, surface: SurfaceKind) -> "HomologyClass":
        return cls(surface, (0,) * surface.dimension)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        return HomologyClass(self.surface, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return HomologyClass(self.surface, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.surface, tuple(-x for x in self.coords))

    def scaled(self, k: int) -> "HomologyClass":
        return HomologyClass(self.surface, tuple(k * x for x in self.coords))

    def up_to_sign(self) -> Tuple[int, ...]:
        """Sign-normalized coordinates: first nonzero entry positive."""
        for x in self.coords:
            if x:
                return self.coords if x > 0 else tuple(-c for c in self.coords)
        return self.coords


def homology_of(surface: SurfaceKind, w: Word) -> HomologyClass:
    """Abelianize a word: exponent sum per generator."""
    if w.alphabet != surface.alphabet:
        raise AlphabetError("word is not over the surface alphabet")
    coords = [0] * surface.dimension
    for code in w.codes:
        coords[abs(code) - 1] += 1 if code > 0 else -1
    return HomologyClass(surface, tuple(coords))


def intersection(x: HomologyClass, y: HomologyClass) -> int:
    """Algebraic intersection number with ⟨a_i, b_i⟩ = 1; boundary classes pair trivially."""
    if len(x.coords) != len(y.coords):
        raise AlphabetError(f"dimension mismatch: {len(x.coords)} vs {len(y.coords)}")
    total = 0
    for j in range(x.surface.genus):
        xa, xb = x.coords[2 * j], x.coords[2 * j + 1]
        ya, yb = y.coords[2 * j], y.coords[2 * j + 1]
        total += xa * yb - xb * ya
    return total
