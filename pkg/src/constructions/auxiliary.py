"""
Auxiliary mapping classes: the lantern curves e_1, e_2, the ψ maps carrying
A_1 onto a_2, e_1, e_2, and the twisting map φ_n.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from errors import PipelineError, UsageError
from mcg import Evaluator, Level, MappingClass
from relators import Relator, lantern
from surface import CurveCatalog, CurveSpec, standard_curve
from words import conj_class, invert

logger = logging.getLogger(__name__)

# t_c t_d(c) = d whenever c and d meet once; each ψ is a chain of such steps
_PSI1_STEPS = ["b2", "a2", "A3", "b2", "b1", "A3", "A1", "b1"]


@dataclass(frozen=True)
class PsiMaps:
    """ψ_1, ψ_2, ψ_3 together with the lantern curves e_1 = ψ_2(A_1), e_2 = ψ_3(A_1)."""

    psi1: MappingClass
    psi2: MappingClass
    psi3: MappingClass
    e1: CurveSpec
    e2: CurveSpec

    def by_label(self) -> Dict[str, MappingClass]:
        return {"psi1": self.psi1, "psi2": self.psi2, "psi3": self.psi3}


def lantern_candidates(catalog: CurveCatalog) -> Tuple[CurveSpec, List[CurveSpec]]:
    """
    e_1 = a_1 a_3⁻¹ and the two curves around A_1, A_3, A_5 that may close the lantern.

    The four boundary loops a_1⁻¹, a_1 a_2⁻¹, a_2 a_3⁻¹, a_3 multiply to 1,
    so e_1 is the product of the middle pair. The third interior curve is
    a_1 a_2⁻¹ a_3 or a_3 a_2⁻¹ a_1 depending on the cyclic order of the
    holes; both have the homology class a_1 - a_2 + a_3.
    """
    surface = catalog.surface
    if surface.genus < 3:
        raise PipelineError("psi", f"ψ maps need genus at least 3, got {surface.genus}")
    if surface.is_closed:
        raise PipelineError("psi", "the lantern curves are built on a bordered surface")
    a1, a2, a3 = surface.a(1), surface.a(2), surface.a(3)
    e1 = standard_curve(surface, "e1", a1 * invert(a3))
    candidates = [
        standard_curve(surface, "e2", a1 * invert(a2) * a3),
        standard_curve(surface, "e2", a3 * invert(a2) * a1),
    ]
    return e1, candidates


def auxiliary_lantern(catalog: CurveCatalog, e1: CurveSpec, e2: CurveSpec) -> Relator:
    """Lantern with interior (e_1, a_2, e_2) and boundary A_1, a_3, A_5, A_3."""
    interior = (e1, catalog.get("a2"), e2)
    boundary = tuple(catalog.get(name) for name in ("A1", "a3", "A5", "A3"))
    return lantern(interior, boundary)


def select_e2(evaluator: Evaluator, catalog: CurveCatalog, e1: CurveSpec,
              candidates: Sequence[CurveSpec]) -> CurveSpec:
    """
    The candidate for which the auxiliary lantern is the identity on π1.

    Raises:
        PipelineError: when no candidate verifies at L2
    """
    reasons = []
    for candidate in candidates:
        verdict = evaluator.is_identity(auxiliary_lantern(catalog, e1, candidate).word, Level.L2)
        logger.debug(f"Lantern with e2 = {candidate.word}: {verdict.status.value} at {verdict.level.value}")
        if verdict.verified and verdict.level == Level.L2:
            return candidate
        reasons.append(f"{candidate.word}: {verdict.reason}")
    raise PipelineError("psi", "no e2 closes the lantern at L2 (" + "; ".join(reasons) + ")")


def psi_words(catalog: CurveCatalog, e1: CurveSpec, e2: CurveSpec) -> Tuple[MappingClass, MappingClass, MappingClass]:
    """
    The twist words of ψ_1, ψ_2, ψ_3.

    ψ_1 walks A_1 → b_1 → A_3 → b_2 → a_2, ψ_2 walks A_1 → b_1 → e_1 and
    ψ_3 walks A_1 → b_1 → e_2.
    """
    psi1 = MappingClass.from_names(catalog, _PSI1_STEPS)
    psi2 = MappingClass.from_names(catalog, ["b1", e1, "A1", "b1"])
    psi3 = MappingClass.from_names(catalog, ["b1", e2, "A1", "b1"])
    return psi1, psi2, psi3


def _require(condition: bool, message: str) -> None:
    if not condition:
        logger.error(f"ψ gate failed: {message}")
        raise PipelineError("psi", message)


def _same_pi1(evaluator: Evaluator, phi: MappingClass, curve: CurveSpec, target: CurveSpec, label: str) -> None:
    """Gate ``phi(curve) = target`` on conjugacy classes; L2 must be available."""
    moved = evaluator.apply_to_class(phi, curve.h1)
    _require(moved.up_to_sign() == target.h1.up_to_sign(), f"{label}({curve.name}) is not {target.name} in H1")
    word = evaluator.image_word(phi, curve)
    _require(word is not None, f"{label}({curve.name}) has no π1 word")
    _require(conj_class(word, True) == target.pi1_class, f"{label}({curve.name}) is not {target.name} in π1")


def psi_catalog(evaluator: Evaluator, catalog: CurveCatalog) -> PsiMaps:
    """
    Build e_1, e_2 and the ψ maps and run the build-time gates at L2.

    Gates: the lantern (e_1, a_2, e_2 | A_1, a_3, A_5, A_3) is Verified at
    L2; ψ_1(A_1) = a_2, ψ_2(A_1) = e_1 and ψ_3(A_1) = e_2 as π1 classes;
    every ψ fixes a_g and a'_g as π1 classes.

    Raises:
        PipelineError: when a gate fails
    """
    g = catalog.surface.genus
    e1, candidates = lantern_candidates(catalog)
    e2 = select_e2(evaluator, catalog, e1, candidates)
    psi1, psi2, psi3 = psi_words(catalog, e1, e2)
    a1 = catalog.get("A1")

    _same_pi1(evaluator, psi1, a1, catalog.get("a2"), "psi1")
    _same_pi1(evaluator, psi2, a1, e1, "psi2")
    _same_pi1(evaluator, psi3, a1, e2, "psi3")
    for label, psi in (("psi1", psi1), ("psi2", psi2), ("psi3", psi3)):
        for name in (f"a{g}", f"a{g}'"):
            curve = catalog.get(name)
            _same_pi1(evaluator, psi, curve, curve, label)

    logger.info(f"ψ maps verified at L2 for genus {g}: e1 = {e1.word}, e2 = {e2.word}")
    return PsiMaps(psi1, psi2, psi3, e1, e2)


def phi_twists(g: int, n: int) -> List[Tuple[str, int]]:
    """
    Twist word of φ_n by the parity of q = ⌊g/2⌋.

    q = 2k:   t_{a_1}⋯t_{a_{k-1}} t_{a_k}^n t_{b_{k+2}}⋯t_{b_{2k}}
    q = 2k+1: t_{a_1}⋯t_{a_{k-1}} t_{a_k}^n t_{b_{k+3}}⋯t_{b_{2k+1}}
    """
    if g < 4:
        raise UsageError(f"φ_n needs genus at least 4, got {g}")
    if n < 1:
        raise UsageError(f"φ_n needs n at least 1, got {n}")
    q = g // 2
    k = q // 2
    twists = [(f"a{i}", 1) for i in range(1, k)]
    twists.append((f"a{k}", n))
    first_b = k + 2 if q % 2 == 0 else k + 3
    twists.extend((f"b{i}", 1) for i in range(first_b, q + 1))
    return twists


def phi_n(catalog: CurveCatalog, n: int) -> MappingClass:
    return MappingClass.from_names(catalog, phi_twists(catalog.surface.genus, n))
