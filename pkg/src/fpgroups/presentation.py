"""
Finite presentations ⟨generators | relators⟩ and their text form.

Text form, one entry per line:

    gens: a1 b1 a2 b2
    rel: a1 b1 a1^-1 b1^-1
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from errors import PresentationError
from surface import SurfaceKind, c_word
from words import Alphabet, Word, parse_word


@dataclass(frozen=True)
class Presentation:
    """
    A finitely presented group.

    ``relators`` are freely reduced and nonempty; trivial relators are
    dropped on construction. ``note`` records how the presentation was
    obtained (e.g. that it presents a group surjecting onto π1).
    """

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()
    note: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        relators = []
        for word in self.relators:
            if tuple(word.alphabet.names) != self.generators:
                raise PresentationError(f"relator over {word.alphabet.names}, expected {self.generators}")
            if word.codes:
                relators.append(word)
        object.__setattr__(self, "relators", tuple(relators))

    @property
    def alphabet(self) -> Alphabet:
        if not self.generators:
            raise PresentationError("presentation has no generators")
        return Alphabet(self.generators)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def with_relators(self, extra) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(extra), self.note)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines.extend(f"rel: {word.to_text()}" for word in self.relators)
        return "\n".join(lines) + "\n"

    def to_sympy(self):
        """The sympy FpGroup together with its free generators in our order."""
        if not self.generators:
            raise PresentationError("sympy needs at least one generator")
        free, *gens = free_group(", ".join(self.generators))
        relators = []
        for word in self.relators:
            element = free.identity
            for index, sign in word.letters:
                element = element * gens[index] ** sign
            relators.append(element)
        return FpGroup(free, relators), gens


def parse_presentation(text: str) -> Presentation:
    """Inverse of ``Presentation.to_text``."""
    generators: List[str] = []
    raw: List[str] = []
    seen_gens = False
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        if key == "gens":
            if seen_gens:
                raise PresentationError(f"line {number}: duplicate gens line")
            generators = value.split()
            seen_gens = True
        elif key == "rel":
            raw.append(value)
        else:
            raise PresentationError(f"line {number}: expected 'gens:' or 'rel:', got '{line}'")
    if not seen_gens:
        raise PresentationError("missing gens line")
    if not generators:
        if any(value.split() for value in raw):
            raise PresentationError("relators given for a presentation without generators")
        return Presentation(())
    alphabet = Alphabet(tuple(generators))
    return Presentation(alphabet.names, tuple(parse_word(alphabet, value) for value in raw))


def surface_presentation(surface: SurfaceKind) -> Presentation:
    """π1 of the closed genus-g surface: ⟨a_1, b_1, …, a_g, b_g | c_g⟩."""
    closed = surface.closed()
    return Presentation(closed.alphabet.names, (c_word(closed, closed.genus),))
