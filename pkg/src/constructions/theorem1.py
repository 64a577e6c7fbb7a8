"""
Genus-g Lefschetz fibration over the sphere with 2g(4g+2)+1 singular fibers,
a (-1)-section and trivial π1, built from the even chain relation.
"""

import logging
from typing import List

from errors import PipelineError, UsageError
from factorization import Factorization
from mcg import Evaluator, MappingClass
from relators import even_chain, odd_chain
from surface import CurveCatalog, SurfaceKind, catalog_for
from words import ConjClass, conj_class

from .auxiliary import PsiMaps, auxiliary_lantern, psi_catalog
from .lemma import lemma41
from .pipeline import PipelineReport, StageRunner, TrivialityWitness


logger = logging.getLogger(__name__)

THEOREM1 = "thm1"


def _x_block(catalog: CurveCatalog) -> list:
    """A_2g⋯A_1 A_1⋯A_2g."""
    g = catalog.surface.genus
    chain = [catalog.get(f"A{i}") for i in range(1, 2 * g + 1)]
    return list(reversed(chain)) + chain


def _expect(f: Factorization, index: int, expected, stage: str) -> None:
    if f.cycles[index] != expected:
        raise PipelineError(stage, f"expected {expected.name} at {index}, found {f.cycles[index].name}")


def _rho_class(evaluator: Evaluator, rho: MappingClass, curve) -> ConjClass:
    word = evaluator.image_word(rho, curve)
    if word is None:
        raise PipelineError("witness", f"rho({curve.name}) has no π1 word")
    return conj_class(word, True)


def find_witness(evaluator: Evaluator, f: Factorization, psi: PsiMaps, catalog: CurveCatalog) -> TrivialityWitness:
    """
    Locate ρ(A_1), …, ρ(A_2g) among the cycles of the bordered lift, ρ = t_{e_1}ψ_1.

    Cycles are matched by the conjugacy class of their π1 word against the
    π1 image of each A_i.

    Raises:
        PipelineError: when some ρ(A_i) is missing or has no π1 word
    """
    g = catalog.surface.genus
    rho = MappingClass(catalog.surface, ((psi.e1, 1),)) * psi.psi1
    curves = [catalog.get(f"A{i}") for i in range(1, 2 * g + 1)]
    classes = [curve.pi1_class for curve in f.cycles]
    positions: List[int] = []
    for curve in curves:
        target = _rho_class(evaluator, rho, curve)
        try:
            positions.append(classes.index(target))
        except ValueError:
            raise PipelineError("witness", f"no cycle is rho({curve.name}) in π1") from None
    logger.debug(f"Witness positions {positions}")
    return TrivialityWitness(rho, tuple(curves), tuple(positions))


def check_witness(evaluator: Evaluator, f: Factorization, witness: TrivialityWitness) -> bool:
    """
    Whether cycle ``positions[i]`` of the lift is ρ(curves[i]).

    Compares π1 conjugacy classes when the lift is bordered and both words
    exist, homology classes up to sign otherwise.
    """
    if len(witness.positions) != len(witness.curves):
        return False
    for curve, position in zip(witness.curves, witness.positions):
        if not 0 <= position < len(f):
            return False
        cycle = f.cycles[position]
        word = evaluator.image_word(witness.rho, curve)
        if word is not None and cycle.word is not None:
            if conj_class(word, True) != cycle.pi1_class:
                return False
            continue
        target = evaluator.apply_to_class(witness.rho, curve.h1).up_to_sign()
        if cycle.h1.up_to_sign() != target:
            return False
    return True


def build_theorem1(runner: StageRunner, g: int) -> PipelineReport:
    """
    Run the genus-g construction.

    Stages: C_2g, C'_2g, H, H^ψ1, H', H'', I and the closed Î. Each stage
    is gated by the runner.

    Args:
        runner: stage runner holding the evaluator and move engine
        g: genus, at least 3

    Returns:
        PipelineReport whose final factorization is Î
    """
    if g < 3:
        raise UsageError(f"thm1 needs genus at least 3, got {g}")
    engine = runner.engine
    catalog = catalog_for(SurfaceKind(g, 1))
    logger.info(f"Building thm1 for genus {g}")

    psi = psi_catalog(runner.evaluator, catalog)
    base_relator = runner.expose(even_chain(catalog))
    c2g = runner.gate("C2g", Factorization(catalog.surface, base_relator.positive, (1,)))

    c_prime = runner.gate("C2g_prime", lemma41(engine, catalog), c2g)

    # two inverse odd-chain substitutions collapse each (A_1⋯A_{2g-1})^{2g}
    odd = runner.expose(odd_chain(catalog, g))
    collapse = runner.expose(odd.inverse())
    x_len = 4 * g
    h = engine.substitute(c_prime, 0, collapse)
    h = engine.substitute(h, 2 + x_len, collapse)
    a_g, a_g_prime = catalog.get(f"a{g}"), catalog.get(f"a{g}'")
    expected = ([a_g, a_g_prime] + _x_block(catalog)) * 2
    if h.cycles != tuple(expected):
        raise PipelineError("H", "collapsed word is not (a_g a'_g X)^2")
    h = runner.gate("H", h, c_prime)

    segments = [(2, 2 + x_len), (x_len + 4, 2 * x_len + 4)]
    h_psi1 = engine.partial_conjugation(h, segments, psi.psi1, "psi1", identify={"A1": catalog.get("a2")})
    h_psi1 = runner.gate("H_psi1", h_psi1, h)

    chain_len = (2 * g - 1) * 2 * g
    half = chain_len + x_len
    h_prime = engine.substitute(h_psi1, 0, odd, psi.psi2, "psi2", identify={"A1": psi.e1})
    h_prime = engine.substitute(h_prime, half, odd, psi.psi3, "psi3", identify={"A1": psi.e2})
    _expect(h_prime, 0, psi.e1, "H_prime")
    _expect(h_prime, half, psi.e2, "H_prime")
    h_prime = runner.gate("H_prime", h_prime, h_psi1)

    # collect e1 a2 e2 at the right end
    total = len(h_prime)
    second_a2 = chain_len + 2 * g
    f = engine.push_twist(h_prime, half)
    _expect(f, second_a2, catalog.get("a2"), "H_double_prime")
    f = engine.push_twist(f, second_a2, total - 2)
    f = engine.push_twist(f, 0, total - 3)
    h_double = runner.gate("H_double_prime", f, h_prime)

    lantern_inverse = runner.expose(auxiliary_lantern(catalog, psi.e1, psi.e2).inverse())
    lift = engine.substitute(h_double, total - 3, lantern_inverse)
    lift = runner.gate("I", lift, h_double)
    if len(lift) != 2 * g * (4 * g + 2) + 1:
        raise PipelineError("I", f"{len(lift)} cycles, expected {2 * g * (4 * g + 2) + 1}")

    witness = find_witness(runner.evaluator, lift, psi, catalog)
    final = runner.gate("I_hat", engine.close_up(lift), lift)
    base = engine.close_up(c2g)
    logger.info(f"thm1 genus {g}: {len(final)} cycles, sigma delta {final.sigma_delta_total}")
    return runner.report(THEOREM1, g, final, lift, base, witness=witness)
