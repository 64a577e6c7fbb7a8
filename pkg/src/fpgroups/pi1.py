"""
Fundamental groups of total spaces: with a section, π1(X) is π1(Σ_g)
modulo the normal closure of the vanishing cycles.
"""

import logging
from typing import Any, Dict, Optional, Sequence, Tuple

from errors import PresentationError
from factorization import Factorization, sections
from surface import CurveSpec, catalog_for, project_to_closed
from words import Word

from .abelian import AbelianInvariants, is_surjective, quotient_images, verify_quotient_map
from .presentation import Presentation, surface_presentation


logger = logging.getLogger(__name__)


def pi1_total_space(f: Factorization, witness: Optional[Sequence[CurveSpec]] = None) -> Presentation:
    """
    Presentation ⟨a_1, b_1, …, a_g, b_g | c_g, v_1, …, v_n⟩ of π1 of the total space.

    Args:
        f: factorization; bordered lifts are read on the closed surface
        witness: curves w_i such that φ(w_i) is a cycle of ``f`` for one
            fixed mapping class φ; used when some cycle has no π1 word.
            The result then presents a group surjecting onto π1(X).

    Raises:
        PresentationError: no section, or cycle words unavailable without a witness
    """
    if not sections(f):
        raise PresentationError("π1 of the total space needs a section (boundary exponent 1)")
    base = surface_presentation(f.surface)
    closed = catalog_for(f.surface.closed())
    cycles = [project_to_closed(curve, closed) for curve in f.cycles]
    missing = [curve.name for curve in cycles if curve.word is None]
    if not missing:
        return Presentation(base.generators, base.relators + tuple(curve.word for curve in cycles),
                            note="vanishing cycles")
    if witness is None:
        raise PresentationError(f"no π1 word for {len(missing)} cycles (first: {missing[0]})")
    words = []
    for curve in witness:
        projected = project_to_closed(curve, closed)
        if projected.word is None:
            raise PresentationError(f"witness curve {curve.name} has no π1 word")
        words.append(projected.word)
    logger.info(f"π1 via witness: {len(words)} curves stand in for {len(missing)} cycles without words")
    return Presentation(base.generators, base.relators + tuple(words),
                        note="witness quotient: presents a group surjecting onto π1(X)")


def homology_presentation(f: Factorization) -> Presentation:
    """
    ⟨a_1, b_1, …, a_g, b_g | c_g, h(v_1), …, h(v_n)⟩ where h(v) is a word with
    the exponent sums of [v].

    It has the same abelianization as π1 of the total space and needs no
    π1 words, so it works for every cycle.

    Raises:
        PresentationError: no section
    """
    if not sections(f):
        raise PresentationError("H1 of the total space needs a section (boundary exponent 1)")
    base = surface_presentation(f.surface)
    closed = catalog_for(f.surface.closed())
    alphabet = base.alphabet
    relators = []
    for curve in f.cycles:
        coords = project_to_closed(curve, closed).h1.coords
        codes = []
        for index, k in enumerate(coords):
            letter = index + 1 if k > 0 else -(index + 1)
            codes.extend([letter] * abs(k))
        relators.append(Word(alphabet, tuple(codes)))
    return Presentation(base.generators, base.relators + tuple(relators), note="homology classes of the vanishing cycles")


def normalized_images(target: AbelianInvariants, images: Dict[str, Tuple[int, ...]],
                      torsion_generator: str, free_generator: str) -> Dict[str, Tuple[int, ...]]:
    """
    Compose a map onto Z ⊕ Z_n with the automorphism sending the image of
    ``torsion_generator`` to (0, 1) and that of ``free_generator`` to (1, 0).

    With b ↦ (β, y_b), a ↦ (0, y_a), β = ±1 and y_a a unit mod n, the
    automorphism is (x, y) ↦ (βx, y_a⁻¹(y - y_b·βx)).

    Raises:
        PresentationError: the target is not Z ⊕ Z_n, or the two images do not form a basis
    """
    if not target.is_z_plus_cyclic():
        raise PresentationError(f"basis normalization needs Z ⊕ Z_n, got {target.describe()}")
    for name in (torsion_generator, free_generator):
        if name not in images:
            raise PresentationError(f"no image for generator {name}")
    n = target.torsion[0] if target.torsion else 1
    beta = images[free_generator][0]
    y_b = images[free_generator][1] if n > 1 else 0
    alpha = images[torsion_generator][0]
    y_a = images[torsion_generator][1] if n > 1 else 1
    if alpha != 0 or beta not in (1, -1):
        raise PresentationError(f"{torsion_generator}, {free_generator} do not map to a basis of {target.describe()}")
    try:
        unit = pow(y_a, -1, n) if n > 1 else 1
    except ValueError:
        raise PresentationError(f"{torsion_generator} does not generate Z_{n}") from None

    def change(vector: Sequence[int]) -> Tuple[int, ...]:
        x = beta * vector[0]
        if n == 1:
            return (x,)
        return (x, unit * (vector[1] - y_b * x) % n)

    return {name: change(vector) for name, vector in images.items()}


def quotient_certificate(f: Factorization, basis: Optional[Tuple[str, str]] = None) -> Dict[str, Any]:
    """
    Explicit surjection from π1 of the total space onto its abelianization.

    Generator images come from the Smith transform of the homology
    presentation; they are checked to kill every relator of the π1
    presentation (the homology one when some cycle has no word) and to
    generate the target. With ``basis = (a, b)`` and a target Z ⊕ Z_n the
    images are normalized to a ↦ (0, 1), b ↦ (1, 0).
    """
    shadow = homology_presentation(f)
    target, images = quotient_images(shadow)
    if basis is not None:
        images = normalized_images(target, images, *basis)
    try:
        full = pi1_total_space(f)
    except PresentationError as e:
        logger.info(f"quotient map checked on the homology presentation: {e}")
        full = shadow
    return {
        "target": target.to_dict(),
        "describe": target.describe(),
        "images": {name: list(vector) for name, vector in images.items()},
        "checked_on": full.note,
        "relators_vanish": verify_quotient_map(full, target, images),
        "surjective": is_surjective(target, images),
    }
