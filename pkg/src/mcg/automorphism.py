"""
Endomorphisms of free groups given by generator images.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from errors import AlphabetError, BudgetExceeded
from words import Alphabet, Word


@dataclass(frozen=True)
class Pi1Automorphism:
    """Substitution map ``generator i ↦ images[i]`` on a free group."""

    alphabet: Alphabet
    images: Tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.alphabet.rank:
            raise AlphabetError(f"{len(self.images)} images for an alphabet of rank {self.alphabet.rank}")
        for image in self.images:
            if image.alphabet != self.alphabet:
                raise AlphabetError("image word over a different alphabet")

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Pi1Automorphism":
        return cls(alphabet, tuple(Word(alphabet, (i + 1,)) for i in range(alphabet.rank)))

    @classmethod
    def from_images(cls, alphabet: Alphabet, overrides: dict) -> "Pi1Automorphism":
        """Identity except on the generator indices given in ``overrides``."""
        images = [overrides.get(i, Word(alphabet, (i + 1,))) for i in range(alphabet.rank)]
        return cls(alphabet, tuple(images))

    @property
    def size(self) -> int:
        return sum(len(image) for image in self.images)

    def apply(self, w: Word) -> Word:
        if w.alphabet != self.alphabet:
            raise AlphabetError("word is not over the automorphism alphabet")
        codes = []
        for code in w.codes:
            image = self.images[abs(code) - 1].codes
            if code > 0:
                codes.extend(image)
            else:
                codes.extend(-c for c in reversed(image))
        return Word(self.alphabet, tuple(codes))

    def compose(self, inner: "Pi1Automorphism", budget: Optional[int] = None) -> "Pi1Automorphism":
        """Return ``self ∘ inner`` (``inner`` acts first)."""
        result = Pi1Automorphism(self.alphabet, tuple(self.apply(image) for image in inner.images))
        if budget is not None and result.size > budget:
            raise BudgetExceeded(budget, result.size)
        return result

    def is_identity(self) -> bool:
        return all(image.codes == (i + 1,) for i, image in enumerate(self.images))

    def abelianization(self) -> np.ndarray:
        """Integer matrix whose column i is the exponent-sum vector of images[i]."""
        n = self.alphabet.rank
        matrix = np.zeros((n, n), dtype=object)
        for col, image in enumerate(self.images):
            for code in image.codes:
                matrix[abs(code) - 1, col] += 1 if code > 0 else -1
        return matrix

    def to_dict(self) -> dict:
        return {name: str(image) for name, image in zip(self.alphabet.names, self.images)}


def substitution(alphabet: Alphabet, images: Sequence[Word]) -> Pi1Automorphism:
    return Pi1Automorphism(alphabet, tuple(images))
