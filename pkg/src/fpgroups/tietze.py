"""
Explicit Tietze transformations: relator normalization and generator
elimination through relators in which the generator occurs once.
"""

import logging
from typing import List, Optional, Tuple

from errors import PresentationError
from words import Alphabet, Word, conj_class
from words.free_group import cyclic_reduce

from .presentation import Presentation


logger = logging.getLogger(__name__)


def _occurrences(word: Word, index: int) -> int:
    return sum(1 for code in word.codes if abs(code) == index + 1)


def normalize(p: Presentation) -> Presentation:
    """
    Cyclically reduce every relator and drop repeats.

    A relator, its cyclic conjugates and its inverse have the same normal
    closure, so only one per orientation-agnostic conjugacy class is kept.
    """
    if not p.generators:
        return p
    alphabet = p.alphabet
    seen = set()
    relators = []
    for word in p.relators:
        reduced = Word(alphabet, cyclic_reduce(word.codes))
        if not reduced.codes:
            continue
        key = conj_class(reduced, True)
        if key in seen:
            continue
        seen.add(key)
        relators.append(reduced)
    return Presentation(p.generators, tuple(relators), p.note)


def eliminate_generator(p: Presentation, generator: str, relator_index: int) -> Presentation:
    """
    Remove ``generator`` with the relator at ``relator_index``.

    The relator must contain the generator exactly once; rotated to x^ε·u it
    gives x = u^{-ε}, which is substituted into every other relator.

    Raises:
        PresentationError: unknown generator, bad index, or not exactly one occurrence
    """
    if generator not in p.generators:
        raise PresentationError(f"unknown generator '{generator}'")
    if not 0 <= relator_index < len(p.relators):
        raise PresentationError(f"relator index {relator_index} out of range for {len(p.relators)} relators")
    index = p.generators.index(generator)
    relator = p.relators[relator_index]
    if _occurrences(relator, index) != 1:
        raise PresentationError(f"{generator} must occur exactly once in {relator.to_text()}")

    codes = relator.codes
    at = next(k for k, code in enumerate(codes) if abs(code) == index + 1)
    sign = 1 if codes[at] > 0 else -1
    rest = codes[at + 1:] + codes[:at]
    # x = u^{-1} for x·u, x = u for x^{-1}·u
    value = [-code for code in reversed(rest)] if sign > 0 else list(rest)

    remaining = tuple(name for name in p.generators if name != generator)
    if not remaining:
        logger.debug(f"Tietze: eliminated the last generator {generator}")
        return Presentation((), (), p.note)
    target = Alphabet(remaining)

    def relabel(code: int) -> int:
        position = abs(code) - 1
        shifted = position if position < index else position - 1
        return (shifted + 1) * (1 if code > 0 else -1)

    relators = []
    for k, word in enumerate(p.relators):
        if k == relator_index:
            continue
        out: List[int] = []
        for code in word.codes:
            if abs(code) == index + 1:
                piece = value if code > 0 else [-c for c in reversed(value)]
                out.extend(relabel(c) for c in piece)
            else:
                out.append(relabel(code))
        relators.append(Word(target, tuple(out)))
    return Presentation(remaining, tuple(relators), p.note)


def _candidate(p: Presentation) -> Optional[Tuple[str, int]]:
    """(generator, relator index) whose elimination adds the fewest letters."""
    best = None
    for k, relator in enumerate(p.relators):
        for index, name in enumerate(p.generators):
            if _occurrences(relator, index) != 1:
                continue
            growth = (len(relator) - 1) * sum(_occurrences(word, index) for j, word in enumerate(p.relators) if j != k)
            key = (growth, len(relator), k, index)
            if best is None or key < best[0]:
                best = (key, name, k)
    return None if best is None else (best[1], best[2])


def tietze_simplify(p: Presentation, budget: Optional[int] = None) -> Presentation:
    """
    Eliminate generators until no relator contains one exactly once.

    Args:
        p: presentation
        budget: maximal number of eliminations (None: until a fixed point)

    Returns:
        A presentation of the same group
    """
    current = normalize(p)
    eliminated = 0
    while current.generators and (budget is None or eliminated < budget):
        choice = _candidate(current)
        if choice is None:
            break
        generator, k = choice
        current = normalize(eliminate_generator(current, generator, k))
        eliminated += 1
    logger.debug(f"Tietze: {p.rank} -> {current.rank} generators, "
                 f"{len(p.relators)} -> {len(current.relators)} relators")
    return current
