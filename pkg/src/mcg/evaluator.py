"""
Exact evaluation of twist words on H1 (L1) and on the free fundamental group (L2).
"""

import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np

from errors import BudgetExceeded, EvaluationError
from surface import CurveSpec, HomologyClass, SurfaceKind, image_curve
from words import Word, conj_class

from .automorphism import Pi1Automorphism
from .handle_model import HandleModel
from .homology import apply_matrix, identity_matrix, matrices_equal, transvection_matrix
from .mapping_class import Level, MappingClass, Status, Verdict


class Evaluator:
    """
    Evaluates mapping classes and decides identity claims.

    L2 works in the handle basis internally and converts to the catalog
    basis only for reported automorphisms. Every bordered curve with a π1
    word has a formula (closed-form for the standard curves, the ribbon
    graph otherwise); closed surfaces, curves that are not simple and budget
    breaches fall back to L1.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the Evaluator.

        Args:
            config: Engine configuration; ``word_budget`` caps the total
                letters of intermediate generator images
        """
        config = config or {}
        self.word_budget = int(config.get("word_budget", 1_000_000))
        self.logger = logging.getLogger(self.__class__.__name__)

        self._models: Dict[SurfaceKind, HandleModel] = {}
        self._twist_cache: Dict[Tuple[CurveSpec, int], Pi1Automorphism] = {}
        self._handle_cache: Dict[MappingClass, Pi1Automorphism] = {}
        self._matrix_cache: Dict[MappingClass, np.ndarray] = {}
        self._image_cache: Dict[Tuple[MappingClass, CurveSpec, str], CurveSpec] = {}
        self._catalog_cache: Dict[MappingClass, Pi1Automorphism] = {}

    def model(self, surface: SurfaceKind) -> HandleModel:
        if surface not in self._models:
            self._models[surface] = HandleModel(surface)
        return self._models[surface]

    # --- capability -------------------------------------------------------

    def missing_formula(self, curve: CurveSpec) -> Optional[str]:
        """Name of the first curve in the realization chain with no π1 formula, or None."""
        if curve.surface.is_closed:
            return curve.name
        if curve.word is not None or curve.twist_model is not None:
            return None
        if curve.realization.is_image:
            blocker = self.missing_formula_for(curve.realization.phi)
            if blocker is not None:
                return blocker
            return self.missing_formula(curve.realization.base)
        return curve.name

    def missing_formula_for(self, m: MappingClass) -> Optional[str]:
        for curve, _ in m.twists:
            blocker = self.missing_formula(curve)
            if blocker is not None:
                return blocker
        return None

    def supports_l2(self, m: MappingClass) -> bool:
        return not m.surface.is_closed and self.missing_formula_for(m) is None

    # --- L2 ----------------------------------------------------------------

    def _handle_twist(self, curve: CurveSpec, exponent: int) -> Pi1Automorphism:
        key = (curve, exponent)
        if key in self._twist_cache:
            return self._twist_cache[key]
        if curve.twist_model is not None and not curve.surface.is_closed:
            result = self.model(curve.surface).twist(curve.twist_model, exponent)
        elif curve.word is not None and not curve.surface.is_closed:
            result = self.model(curve.surface).word_twist(curve.word, exponent)
        elif curve.realization.is_image:
            phi = curve.realization.phi
            outer = self.handle_automorphism(phi)
            inner = self.handle_automorphism(phi.inverse())
            base = self._handle_twist(curve.realization.base, exponent)
            result = outer.compose(base.compose(inner, self.word_budget), self.word_budget)
        else:
            raise EvaluationError(f"no π1 formula for curve {curve.name}")
        self._twist_cache[key] = result
        return result

    def handle_automorphism(self, m: MappingClass) -> Pi1Automorphism:
        """Handle-basis automorphism of ``m``; raises BudgetExceeded or EvaluationError."""
        if m in self._handle_cache:
            return self._handle_cache[m]
        if m.surface.is_closed:
            raise EvaluationError("L2 evaluation needs a bordered surface")
        result = Pi1Automorphism.identity(m.surface.alphabet)
        for curve, exponent in m.twists:
            result = result.compose(self._handle_twist(curve, exponent), self.word_budget)
        self._handle_cache[m] = result
        return result

    def twist_automorphism(self, curve: CurveSpec, exponent: int = 1) -> Pi1Automorphism:
        """Catalog-basis automorphism of t_c^exponent."""
        handle = self._handle_twist(curve, exponent)
        return self.model(curve.surface).in_catalog_basis(handle)

    # --- L1 ----------------------------------------------------------------

    def homology_matrix(self, m: MappingClass) -> np.ndarray:
        if m in self._matrix_cache:
            return self._matrix_cache[m]
        result = identity_matrix(m.surface)
        for curve, exponent in m.twists:
            result = result @ transvection_matrix(curve.h1, exponent)
        self._matrix_cache[m] = result
        return result

    # --- public API ----------------------------------------------------------

    def evaluate(self, m: MappingClass, level: Level = Level.L1):
        """
        Evaluate a mapping class.

        Args:
            m: twist word
            level: L1 for the H1 matrix, L2 for the catalog-basis π1 automorphism

        Returns:
            numpy object matrix (L1) or Pi1Automorphism (L2)
        """
        if level == Level.L1:
            return self.homology_matrix(m)
        if m.surface.is_closed:
            raise EvaluationError("L2 evaluation needs a bordered surface")
        blocker = self.missing_formula_for(m)
        if blocker is not None:
            raise EvaluationError(f"no π1 formula for curve {blocker}")
        if m not in self._catalog_cache:
            self._catalog_cache[m] = self.model(m.surface).in_catalog_basis(self.handle_automorphism(m))
        return self._catalog_cache[m]

    def is_identity(self, m: MappingClass, level: Level = Level.L2) -> Verdict:
        """
        Decide whether a twist word is the identity at the highest feasible level.

        L1 Refuted and L2 Verified are definitive. L1 Verified is only a
        necessary condition; when L2 was requested but not feasible the
        result is Inconclusive with the reason recorded.
        """
        matrix = self.homology_matrix(m)
        if not matrices_equal(matrix, identity_matrix(m.surface)):
            return Verdict(Status.REFUTED, Level.L1, "nontrivial action on H1")
        if level == Level.L1:
            return Verdict(Status.VERIFIED, Level.L1, "H1 action trivial (necessary condition)")

        if m.surface.is_closed:
            return Verdict(Status.INCONCLUSIVE, Level.L1, "closed surface: L2 needs a bordered lift")
        blocker = self.missing_formula_for(m)
        if blocker is not None:
            return Verdict(Status.INCONCLUSIVE, Level.L1, f"H1 trivial; no π1 formula for {blocker}")
        try:
            automorphism = self.handle_automorphism(m)
        except BudgetExceeded as e:
            self.logger.warning(f"L2 evaluation of {len(m)} twists abandoned: {e}")
            return Verdict(Status.INCONCLUSIVE, Level.L1, f"H1 trivial; {e}")
        except EvaluationError as e:
            self.logger.warning(f"L2 evaluation of {len(m)} twists failed: {e}")
            return Verdict(Status.INCONCLUSIVE, Level.L1, f"H1 trivial; {e}")

        if not automorphism.is_identity():
            return Verdict(Status.REFUTED, Level.L2, "nontrivial action on π1")
        if m.surface.boundary_count == 2:
            return Verdict(Status.VERIFIED, Level.L2, "π1 action trivial (up to the inner boundary twist)")
        return Verdict(Status.VERIFIED, Level.L2, "π1 action trivial")

    def apply_to_class(self, m: MappingClass, x: HomologyClass) -> HomologyClass:
        return apply_matrix(self.homology_matrix(m), x)

    def image_word(self, m: MappingClass, curve: CurveSpec) -> Optional[Word]:
        """π1 word of m(curve) in the catalog basis, or None when L2 is unavailable."""
        if curve.word is None or not self.supports_l2(m):
            return None
        try:
            return self.evaluate(m, Level.L2).apply(curve.word)
        except EvaluationError as e:
            self.logger.warning(f"image word of {curve.name} dropped: {e}")
            return None

    def image(self, m: MappingClass, curve: CurveSpec, name: Optional[str] = None) -> CurveSpec:
        """
        The curve m(curve) as an Image realization.

        Nested images are flattened to a single ``phi(base)`` with a freely
        reduced twist word. Homology is always computed; the π1 word only when
        L2 is feasible. When the image is provably the same curve (empty
        reduced word, or equal π1 conjugacy class) the known curve is returned.
        """
        if m.is_empty():
            return curve
        if name is None:
            name = f"t_{m.twists[0][0].name}({curve.name})" if len(m) == 1 else f"phi({curve.name})"
        base, phi = curve, m
        if curve.realization.is_image:
            base = curve.realization.base
            phi = (m * curve.realization.phi).reduced()
            if phi.is_empty():
                return base
        key = (phi, base, name)
        if key in self._image_cache:
            return self._image_cache[key]

        h1 = self.apply_to_class(m, curve.h1)
        word = self.image_word(m, curve)
        if word is not None and curve.word is not None and conj_class(word, True) == curve.pi1_class:
            return curve
        # twists along ι-invariant curves commute with ι
        tags = base.involutions
        for twisted, _ in phi.twists:
            tags = tags & twisted.involutions
        result = image_curve(name, base, phi, h1, word, tags)
        self._image_cache[key] = result
        return result
