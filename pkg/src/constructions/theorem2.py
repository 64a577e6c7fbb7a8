"""
The family Û_n: genus-g fibrations with two (-1)-sections whose total
spaces have H1 = Z ⊕ Z_n, from one plain and one φ_n-twisted W-substitution
into W_{2,g}.
"""

import logging
from typing import List, Sequence, Tuple

from errors import PipelineError, UsageError
from factorization import Factorization
from fpgroups import AbelianInvariants, ReductionStage, staged_reduction, surface_presentation
from mcg import Evaluator, MappingClass
from relators import w_relator
from surface import CurveCatalog, CurveSpec, SurfaceKind, catalog_for, project_to_closed
from words import Word

from .auxiliary import phi_n
from .pipeline import PipelineReport, StageRunner


logger = logging.getLogger(__name__)

THEOREM2 = "thm2"


def _b_block(catalog: CurveCatalog) -> List[CurveSpec]:
    g = catalog.surface.genus
    return [catalog.get(f"B{g}_02")] + [catalog.get(f"B{g}_{i}") for i in range(1, g + 1)]


def _tail(catalog: CurveCatalog) -> List[CurveSpec]:
    g = catalog.surface.genus
    if g % 2 == 0:
        return []
    r = g // 2
    return [catalog.get(f"a{r + 1}"), catalog.get(f"a{r + 1}'")]


def u_n_display(evaluator: Evaluator, catalog: CurveCatalog, phi: MappingClass, label: str) -> List[CurveSpec]:
    """
    U_n written out directly: (B-block, V, tail)(B-block, φ_n(V), tail).

    V is the positive part of W_{1,q} (g even) or W_{2,q} (g odd), q = ⌊g/2⌋;
    the tail t_{a_{r+1}} t_{a'_{r+1}} appears only for odd g.
    """
    g = catalog.surface.genus
    q = g // 2
    inner = w_relator(catalog, 1 if g % 2 == 0 else 2, q).positive
    twisted = [evaluator.image(phi, v, name=f"{label}({v.name})") for v in inner]
    return _b_block(catalog) + list(inner) + _tail(catalog) + _b_block(catalog) + twisted + _tail(catalog)


def certificate_basis(g: int) -> Tuple[str, str]:
    """(a_t, b_t), t = ⌊⌊g/2⌋/2⌋: the generators that end up carrying Z_n and Z."""
    t = (g // 2) // 2
    return f"a{t}", f"b{t}"


def _closed_words(catalog: CurveCatalog, curves: Sequence[CurveSpec]) -> List[Word]:
    closed = catalog_for(catalog.surface.closed())
    words = []
    for curve in curves:
        projected = project_to_closed(curve, closed)
        if projected.word is None:
            raise PipelineError("pi1", f"cycle {curve.name} has no π1 word")
        words.append(projected.word)
    return words


def pi1_stages(evaluator: Evaluator, catalog: CurveCatalog, n: int) -> List[Tuple[str, List[Word], AbelianInvariants]]:
    """
    The quotients of π1(Σ_g) that lead to π1 of the total space of Û_n.

    G1 kills the B-block of W_{2,g} (and the a_{r+1}, a'_{r+1} tail for odd
    g) and is π1(Σ_r), r = ⌊g/2⌋. G2 also kills V and is π1(Σ_t),
    t = ⌊r/2⌋. G3 also kills φ_n(V) and is Z ⊕ Z_n.
    """
    g = catalog.surface.genus
    q = g // 2
    t = q // 2
    inner = w_relator(catalog, 1 if g % 2 == 0 else 2, q).positive
    twisted = [evaluator.image(phi_n(catalog, n), v) for v in inner]
    torsion = (n,) if n > 1 else ()
    return [
        ("G1", _closed_words(catalog, _b_block(catalog) + _tail(catalog)), AbelianInvariants(2 * q)),
        ("G2", _closed_words(catalog, inner), AbelianInvariants(2 * t)),
        ("G3", _closed_words(catalog, twisted), AbelianInvariants(1, torsion)),
    ]


def reduce_pi1(evaluator: Evaluator, catalog: CurveCatalog, n: int) -> List[ReductionStage]:
    """
    Run the staged reduction and check every stage.

    Raises:
        PipelineError: when a stage has the wrong abelianization
    """
    stages = staged_reduction(surface_presentation(catalog.surface), pi1_stages(evaluator, catalog, n))
    for stage in stages:
        if not stage.matches:
            raise PipelineError("pi1", f"{stage.name} has H1 {stage.invariants.describe()}, "
                                       f"expected {stage.expected.describe()}")
    return stages


def build_theorem2(runner: StageRunner, g: int, n: int) -> PipelineReport:
    """
    Run the construction of Û_n.

    Args:
        runner: stage runner holding the evaluator and move engine
        g: genus, at least 4
        n: twisting exponent, at least 1

    Returns:
        PipelineReport whose final factorization is Û_n on the closed surface
    """
    if g < 4:
        raise UsageError(f"thm2 needs genus at least 4, got {g}")
    if n < 1:
        raise UsageError(f"thm2 needs n at least 1, got {n}")
    engine = runner.engine
    catalog = catalog_for(SurfaceKind(g, 2))
    q = g // 2
    label = f"phi{n}"
    phi = phi_n(catalog, n)
    logger.info(f"Building thm2 for genus {g}, n = {n}: phi = {phi.describe()}")

    base_relator = runner.expose(w_relator(catalog, 2, g))
    w = runner.gate("W2g", Factorization(catalog.surface, base_relator.positive, (1, 1)))
    inner = runner.expose(w_relator(catalog, 1 if g % 2 == 0 else 2, q))

    block = g + 1
    f = w
    start = block
    for twist, name in ((None, None), (phi, label)):
        if g % 2:
            # a a a' a' -> a a' a a', then the leading pair is the W_{2,q} boundary
            f = engine.commute(f, start + 1)
        f = engine.substitute(f, start, inner, twist, name)
        start += len(inner.positive) + len(_tail(catalog)) + block
    u_n = runner.gate("U_n", f, w)

    if list(u_n.cycles) != u_n_display(runner.evaluator, catalog, phi, label):
        raise PipelineError("U_n", "substituted word differs from the displayed U_n")
    expected = 2 * (block + len(inner.positive) + len(_tail(catalog)))
    if len(u_n) != expected:
        raise PipelineError("U_n", f"{len(u_n)} cycles, expected {expected}")

    final = runner.gate("U_n_hat", engine.close_up(u_n), u_n)
    base = engine.close_up(w)
    reduction = reduce_pi1(runner.evaluator, catalog, n)
    return runner.report(THEOREM2, g, final, u_n, base, n=n, reduction=reduction)
