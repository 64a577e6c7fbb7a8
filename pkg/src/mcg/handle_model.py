"""
Handle basis of a bordered surface group and the certified twist formulas.

The handle basis x_j, y_j (, z) has outer boundary word ∏[x_j, y_j] (· z)
with [x, y] = x y x⁻¹ y⁻¹. It relates to the catalog basis a_j, b_j (, d2) by

    a_j = s_{j-1}⁻¹ x_j s_{j-1},  b_j = s_{j-1}⁻¹ y_j s_{j-1},  d2 = s_g⁻¹ z s_g

with s_j = y_j ⋯ y_1 = b_1 ⋯ b_j. Both bases share generator labels; the
handle reading is only used inside this module and the evaluator.

Right-handed twist formulas in the handle basis (unlisted generators fixed):

    t_{x_j}:      y_j ↦ y_j x_j
    t_{y_j}:      x_j ↦ x_j y_j⁻¹
    t_{sep j}:    u ↦ C_j⁻¹ u C_j for u in handles 1..j, C_j = ∏_{k≤j}[x_k, y_k]
    t_{outer}:    u ↦ ∂⁻¹ u ∂ for every generator
    t_{inner}:    identity (the basepoint lies on the outer boundary)

Every other curve with a π1 word is twisted through the ribbon graph of
the handle basis (see ``ribbon``).
"""

import logging
from typing import Dict, Tuple

from errors import EvaluationError
from surface import SurfaceKind
from words import Word, invert

from .automorphism import Pi1Automorphism
from .ribbon import curve_twist


logger = logging.getLogger(__name__)


class HandleModel:
    """Basis change and twist formulas for one bordered surface."""

    def __init__(self, surface: SurfaceKind):
        if surface.is_closed:
            raise EvaluationError("π1 twist formulas need a bordered surface")
        self.surface = surface
        self.alphabet = surface.alphabet
        self._twists: Dict[Tuple, Pi1Automorphism] = {}
        self.to_handle = self._to_handle()
        self.to_catalog = self._to_catalog()

    def _gen(self, name: str) -> Word:
        return self.surface.generator(name)

    def _run(self, names) -> Word:
        result = Word(self.alphabet, ())
        for name in names:
            result = result * self._gen(name)
        return result

    def _s_handle(self, j: int) -> Word:
        """s_j = y_j ⋯ y_1 in handle letters."""
        return self._run(f"b{k}" for k in range(j, 0, -1))

    def _s_catalog(self, j: int) -> Word:
        """s_j = b_1 ⋯ b_j in catalog letters."""
        return self._run(f"b{k}" for k in range(1, j + 1))

    def _to_handle(self) -> Pi1Automorphism:
        images = []
        for name in self.alphabet.names:
            if name == "d2":
                s = self._s_handle(self.surface.genus)
            else:
                s = self._s_handle(int(name[1:]) - 1)
            images.append(invert(s) * self._gen(name) * s)
        return Pi1Automorphism(self.alphabet, tuple(images))

    def _to_catalog(self) -> Pi1Automorphism:
        images = []
        for name in self.alphabet.names:
            if name == "d2":
                s = self._s_catalog(self.surface.genus)
            else:
                s = self._s_catalog(int(name[1:]) - 1)
            images.append(s * self._gen(name) * invert(s))
        return Pi1Automorphism(self.alphabet, tuple(images))

    def commutator_product(self, j: int) -> Word:
        """C_j = [x_1, y_1] ⋯ [x_j, y_j] in handle letters."""
        result = Word(self.alphabet, ())
        for k in range(1, j + 1):
            x, y = self._gen(f"a{k}"), self._gen(f"b{k}")
            result = result * x * y * invert(x) * invert(y)
        return result

    def outer_boundary(self) -> Word:
        word = self.commutator_product(self.surface.genus)
        if self.surface.boundary_count == 2:
            word = word * self._gen("d2")
        return word

    def _conjugation(self, by: Word, names, exponent: int) -> Pi1Automorphism:
        power = Word(self.alphabet, ())
        step = by if exponent > 0 else invert(by)
        for _ in range(abs(exponent)):
            power = power * step
        overrides: Dict[int, Word] = {}
        for name in names:
            index = self.alphabet.index(name)
            overrides[index] = invert(power) * self._gen(name) * power
        return Pi1Automorphism.from_images(self.alphabet, overrides)

    def twist(self, model: Tuple, exponent: int = 1) -> Pi1Automorphism:
        """Handle-basis automorphism of t^exponent for a twist-model key."""
        key = (model, exponent)
        if key in self._twists:
            return self._twists[key]
        kind = model[0]
        if kind == "x":
            j = model[1]
            power = Word(self.alphabet, tuple([self.alphabet.letter(f"a{j}", exponent)] * abs(exponent)))
            result = Pi1Automorphism.from_images(self.alphabet, {self.alphabet.index(f"b{j}"): self._gen(f"b{j}") * power})
        elif kind == "y":
            j = model[1]
            power = Word(self.alphabet, tuple([self.alphabet.letter(f"b{j}", -exponent)] * abs(exponent)))
            result = Pi1Automorphism.from_images(self.alphabet, {self.alphabet.index(f"a{j}"): self._gen(f"a{j}") * power})
        elif kind == "sep":
            j = model[1]
            names = [f"{p}{k}" for k in range(1, j + 1) for p in ("a", "b")]
            result = self._conjugation(self.commutator_product(j), names, exponent)
        elif kind == "outer":
            result = self._conjugation(self.outer_boundary(), self.alphabet.names, exponent)
        elif kind == "inner":
            result = Pi1Automorphism.identity(self.alphabet)
        else:
            raise EvaluationError(f"unknown twist model {model!r}")
        self._twists[key] = result
        return result

    def in_catalog_basis(self, handle_map: Pi1Automorphism) -> Pi1Automorphism:
        """Conjugate a handle-basis automorphism into the catalog basis."""
        images = tuple(
            self.to_catalog.apply(handle_map.apply(image)) for image in self.to_handle.images
        )
        return Pi1Automorphism(self.alphabet, images)

    def word_twist(self, word: Word, exponent: int = 1) -> Pi1Automorphism:
        """Handle-basis automorphism of t_c^exponent for the curve with catalog word ``word``."""
        handle_word = self.to_handle.apply(word)
        key = (("word", handle_word.codes), exponent)
        if key not in self._twists:
            self._twists[key] = curve_twist(self.surface, handle_word, self.outer_boundary(), exponent)
        return self._twists[key]
