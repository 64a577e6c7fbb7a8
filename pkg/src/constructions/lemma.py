"""
The chain rewrite (A_1⋯A_2g)^{2g+1} = (A_1⋯A_{2g-1})^{2g} · A_2g⋯A_1 A_1⋯A_2g
realized by commutations and braid shuffles.
"""

import logging
from typing import List, Tuple

from errors import PipelineError
from factorization import Factorization, MoveEngine
from relators import even_chain
from surface import CurveCatalog


logger = logging.getLogger(__name__)

COMMUTE = "commute"
BRAID_SHUFFLE = "braid"


def chain_rewrite_plan(n: int, offset: int = 0) -> List[Tuple[str, int]]:
    """
    Move sequence turning P^{n+1} into Q^n · σ_n⋯σ_1 σ_1⋯σ_n, with P = σ_1⋯σ_n and Q = σ_1⋯σ_{n-1}.

    Indices are 0-based slots of the whole factorization, shifted by ``offset``.
    After round m the word reads Q^{m+1} · σ_n⋯σ_{n-m} · P^{n-m}; round m
    works on the segment X_m · Q · σ_n starting at m(n-1), where
    X_m = σ_n σ_{n-1}⋯σ_{n-m+1}.
    """
    if n < 2:
        raise PipelineError("lemma", f"chain rewrite needs at least two curves, got {n}")
    plan: List[Tuple[str, int]] = []
    for m in range(1, n):
        s = offset + m * (n - 1)
        x = [n - i for i in range(m)]
        # sink each σ_j of X_m past the leading Q letters that commute with it
        for k in range(m - 1, 0, -1):
            j = x[k]
            p = s + k
            for t in range(j - 2):
                plan.append((COMMUTE, p + t))
            plan.append((BRAID_SHUFFLE, p + j - 2))
            for t in range(n - 1 - j):
                plan.append((COMMUTE, p + j + t))
        for t in range(n - 2):
            plan.append((COMMUTE, s + t))
        for position in range(s + n + m - 2, s + n - 1, -1):
            plan.append((COMMUTE, position))
        plan.append((BRAID_SHUFFLE, s + n - 2))
    return plan


def lemma41(engine: MoveEngine, catalog: CurveCatalog) -> Factorization:
    """
    Rewrite C_2g into C'_2g by applying the chain rewrite to both halves.

    Args:
        engine: move engine used for every step
        catalog: one-boundary catalog of genus g ≥ 2

    Returns:
        C'_2g = {(A_1⋯A_{2g-1})^{2g} A_2g⋯A_1 A_1⋯A_2g}² against t_{a_{g+1}}
    """
    g = catalog.surface.genus
    if g < 2:
        raise PipelineError("lemma", f"genus must be at least 2, got {g}")
    relator = even_chain(catalog)
    f = Factorization(catalog.surface, relator.positive, (1,))
    n = 2 * g
    for offset in (0, n * (n + 1)):
        for kind, position in chain_rewrite_plan(n, offset):
            if kind == COMMUTE:
                f = engine.commute(f, position)
            else:
                f = engine.braid_shuffle(f, position)
    expected = rewritten_chain(catalog)
    if f.cycles != tuple(expected):
        raise PipelineError("lemma", "rewritten chain does not match the expected word")
    logger.info(f"Chain rewrite for genus {g}: {len(f.trace)} moves over {len(f)} cycles")
    return f


def rewritten_chain(catalog: CurveCatalog) -> list:
    """The target word {(A_1⋯A_{2g-1})^{2g} A_2g⋯A_1 A_1⋯A_2g}²."""
    g = catalog.surface.genus
    chain = [catalog.get(f"A{i}") for i in range(1, 2 * g + 1)]
    half = chain[:-1] * (2 * g) + list(reversed(chain)) + chain
    return half * 2
