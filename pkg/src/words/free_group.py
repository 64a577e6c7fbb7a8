"""
Exact arithmetic for words in finitely generated free groups.

Letters are stored as signed integers: generator ``i`` (0-based) is ``i + 1``
and its inverse is ``-(i + 1)``. ``Word.letters`` exposes the
``(index, sign)`` view.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from errors import AlphabetError


@dataclass(frozen=True)
class Alphabet:
    """Ordered, pairwise distinct generator labels."""

    names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise AlphabetError("alphabet must have at least one generator")
        if len(set(self.names)) != len(self.names):
            raise AlphabetError(f"duplicate generator labels in {self.names}")

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetError(f"unknown generator '{name}'") from None

    def letter(self, name: str, sign: int = 1) -> int:
        return (self.index(name) + 1) * (1 if sign > 0 else -1)

    def check(self, codes: Iterable[int]) -> None:
        for code in codes:
            if code == 0 or abs(code) > self.rank:
                raise AlphabetError(f"letter {code} outside alphabet of rank {self.rank}")


def free_reduce(codes: Iterable[int]) -> Tuple[int, ...]:
    """Cancel adjacent inverse pairs with a single stack pass."""
    stack: List[int] = []
    for code in codes:
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def cyclic_reduce(codes: Sequence[int]) -> Tuple[int, ...]:
    codes = free_reduce(codes)
    start, end = 0, len(codes)
    while end - start > 1 and codes[start] == -codes[end - 1]:
        start += 1
        end -= 1
    return codes[start:end]


def _letter_key(code: int) -> Tuple[int, int]:
    return (abs(code), 0 if code > 0 else 1)


def _least_rotation(codes: Tuple[int, ...]) -> Tuple[int, ...]:
    if not codes:
        return codes
    best = None
    best_key = None
    for shift in range(len(codes)):
        rotated = codes[shift:] + codes[:shift]
        key = [_letter_key(c) for c in rotated]
        if best_key is None or key < best_key:
            best, best_key = rotated, key
    return best


@dataclass(frozen=True)
class Word:
    """A freely reduced word over an alphabet."""

    alphabet: Alphabet
    codes: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        codes = tuple(self.codes)
        self.alphabet.check(codes)
        object.__setattr__(self, "codes", free_reduce(codes))

    @property
    def letters(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((abs(c) - 1, 1 if c > 0 else -1) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def is_identity(self) -> bool:
        return not self.codes

    def to_text(self) -> str:
        parts = []
        for index, sign in self.letters:
            name = self.alphabet.names[index]
            parts.append(name if sign > 0 else f"{name}^-1")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text() or "1"


@dataclass(frozen=True)
class ConjClass:
    """Canonical conjugacy class representative: least rotation of the cyclic reduction."""

    representative: Word
    orientation_agnostic: bool = False

    def to_text(self) -> str:
        return self.representative.to_text()


def reduce(alphabet: Alphabet, raw: Iterable) -> Word:
    """Reduce a raw letter sequence given as signed codes or ``(index, sign)`` pairs."""
    codes = []
    for item in raw:
        if isinstance(item, tuple):
            index, sign = item
            if index < 0 or index >= alphabet.rank:
                raise AlphabetError(f"generator index {index} outside alphabet of rank {alphabet.rank}")
            codes.append((index + 1) * (1 if sign > 0 else -1))
        else:
            codes.append(int(item))
    return Word(alphabet, tuple(codes))


def _same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetError(f"alphabet mismatch: {u.alphabet.names} vs {v.alphabet.names}")


def multiply(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    return Word(u.alphabet, u.codes + v.codes)


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(-c for c in reversed(w.codes)))


def conjugate(w: Word, g: Word) -> Word:
    """Return g·w·g⁻¹."""
    _same_alphabet(w, g)
    return Word(w.alphabet, g.codes + w.codes + tuple(-c for c in reversed(g.codes)))


def conj_class(w: Word, orientation_agnostic: bool = False) -> ConjClass:
    codes = _least_rotation(cyclic_reduce(w.codes))
    if orientation_agnostic:
        inverse = _least_rotation(tuple(-c for c in reversed(codes)))
        if [_letter_key(c) for c in inverse] < [_letter_key(c) for c in codes]:
            codes = inverse
    return ConjClass(Word(w.alphabet, codes), orientation_agnostic)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """
    Parse whitespace-separated labels with optional integer powers.

    ``name``, ``name^k`` and ``name^-k`` are accepted; ``1`` or empty text is
    the identity.

    Raises:
        AlphabetError: unknown label or a malformed exponent
    """
    codes = []
    for token in text.split():
        if token == "1":
            continue
        name, _, power = token.partition("^")
        try:
            exponent = int(power) if power else 1
        except ValueError:
            raise AlphabetError(f"bad exponent in '{token}'") from None
        code = alphabet.letter(name, 1 if exponent > 0 else -1)
        codes.extend([code] * abs(exponent))
    return Word(alphabet, tuple(codes))
