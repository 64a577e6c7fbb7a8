"""
Dehn twists along arbitrary simple closed curves, read off the one-vertex
ribbon graph of the handle basis.

The bordered surface is a disk with one untwisted band per generator. Going
counterclockwise around the disk from the basepoint the band ends appear as

    x_1 out, y_1 in, x_1 in, y_1 out, ..., x_g out, y_g in, x_g in, y_g out (, z out, z in)

which makes the outer boundary read ∏[x_j, y_j] (· z). A cyclically reduced
word is drawn with its strands stacked inside every band; the order of the
strands at a band end is fixed by following two strands until their chords
in the disk part ways. Each generator loop then picks up one copy of the
curve, or of its inverse, per crossing.
"""

import logging
from functools import cmp_to_key
from typing import Dict, List, Tuple

from errors import EvaluationError
from surface import SurfaceKind
from words import Word, conj_class, invert
from words.free_group import cyclic_reduce

from .automorphism import Pi1Automorphism


logger = logging.getLogger(__name__)

OUT = 0
IN = 1

ARRIVAL = "arr"
DEPARTURE = "dep"
MARKER = "marker"


def end_positions(surface: SurfaceKind) -> Dict[Tuple[int, int], int]:
    """Counterclockwise position of every band end, keyed by (generator index, OUT/IN)."""
    alphabet = surface.alphabet
    positions: Dict[Tuple[int, int], int] = {}
    for j in range(1, surface.genus + 1):
        x, y = alphabet.index(f"a{j}"), alphabet.index(f"b{j}")
        base = 4 * (j - 1)
        positions[(x, OUT)] = base
        positions[(y, IN)] = base + 1
        positions[(x, IN)] = base + 2
        positions[(y, OUT)] = base + 3
    if surface.boundary_count == 2:
        z = alphabet.index("d2")
        positions[(z, OUT)] = 4 * surface.genus
        positions[(z, IN)] = 4 * surface.genus + 1
    return positions


def _departure(code: int) -> Tuple[int, int]:
    return (abs(code) - 1, OUT if code > 0 else IN)


def _arrival(code: int) -> Tuple[int, int]:
    return (abs(code) - 1, IN if code > 0 else OUT)


def _between(u: int, low: int, high: int) -> bool:
    """Whether u lies on the open counterclockwise arc from low to high."""
    if low < high:
        return low < u < high
    return u > low or u < high


class RibbonCurve:
    """
    One simple closed curve drawn on the ribbon graph.

    Args:
        surface: bordered surface whose handle basis the word is written in
        word: handle-basis word of the curve (any conjugate)

    Raises:
        EvaluationError: trivial word or proper power
    """

    def __init__(self, surface: SurfaceKind, word: Word):
        self.surface = surface
        self.alphabet = surface.alphabet
        self.codes = cyclic_reduce(word.codes)
        if not self.codes:
            raise EvaluationError("cannot twist along a null-homotopic curve")
        self.n = len(self.codes)
        self.positions = end_positions(surface)
        self.modulus = len(self.positions)
        self.index = self._layout()

    # --- strand order --------------------------------------------------------

    def _step(self, point: Tuple[str, int], k: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """(current end, chord target) after k chords along the disk side of a point."""
        kind, strand = point
        t = self.codes
        n = self.n
        if kind == ARRIVAL:
            return _arrival(t[(strand + k) % n]), _departure(t[(strand + k + 1) % n])
        return _departure(t[(strand - k) % n]), _arrival(t[(strand - k - 1) % n])

    def _compare(self, left: Tuple[str, int], right: Tuple[str, int]) -> int:
        # every step crosses one chord and one band, so the order found at
        # step k is the order at the starting end
        for k in range(2 * self.n + 1):
            current, target_left = self._step(left, k)
            _, target_right = self._step(right, k)
            if target_left != target_right:
                base = self.positions[current]
                d_left = (self.positions[target_left] - base) % self.modulus
                d_right = (self.positions[target_right] - base) % self.modulus
                return 1 if d_left < d_right else -1
        raise EvaluationError(f"word {Word(self.alphabet, self.codes)} is a proper power")

    def _layout(self) -> Dict[Tuple[str, int], int]:
        """Global counterclockwise index of every point; the basepoint is 0."""
        at_end: Dict[Tuple[int, int], List[Tuple[str, int]]] = {end: [] for end in self.positions}
        for i, code in enumerate(self.codes):
            at_end[_arrival(code)].append((ARRIVAL, i))
            at_end[_departure(code)].append((DEPARTURE, i))

        index: Dict[Tuple[str, int], int] = {}
        counter = 1
        for end in sorted(self.positions, key=self.positions.get):
            generator, side = end
            points = sorted(at_end[end], key=cmp_to_key(self._compare))
            if side == OUT:
                points = [(MARKER, 2 * generator)] + points
            else:
                points = points + [(MARKER, 2 * generator + 1)]
            for point in points:
                index[point] = counter
                counter += 1
        self.total = counter
        return index

    # --- twisting ------------------------------------------------------------

    def _arcs(self) -> List[Tuple[int, int, int]]:
        """(arc number k, start, end) for the chord from strand k to strand k+1."""
        return [
            (k, self.index[(ARRIVAL, k)], self.index[(DEPARTURE, (k + 1) % self.n)])
            for k in range(self.n)
        ]

    def _rotation(self, k: int, sign: int) -> Word:
        rotated = Word(self.alphabet, self.codes[k + 1:] + self.codes[:k + 1])
        return rotated if sign > 0 else invert(rotated)

    def _crossings(self, start: int, stop: int, arcs) -> List[Tuple[int, int]]:
        """(arc number, sign) for the arcs crossing the chord start → stop, in order along it."""
        found = []
        for k, a, b in arcs:
            if _between(a, start, stop) == _between(b, start, stop):
                continue
            inner = a if _between(a, start, stop) else b
            key = (inner - start) % self.total
            found.append((key, k, -1 if _between(b, start, stop) else 1))
        found.sort()
        return [(k, sign) for _, k, sign in found]

    def twist(self, exponent_sign: int = 1) -> Pi1Automorphism:
        """Handle-basis automorphism of the right-handed twist (``-1``: its inverse)."""
        arcs = self._arcs()
        images = []
        for generator in range(self.alphabet.rank):
            e = Word(self.alphabet, (generator + 1,))
            out_marker = self.index[(MARKER, 2 * generator)]
            in_marker = self.index[(MARKER, 2 * generator + 1)]
            image = Word(self.alphabet, ())
            for k, sign in self._crossings(0, out_marker, arcs):
                image = image * self._rotation(k, sign * exponent_sign)
            for k, sign in self._crossings(in_marker, 0, arcs):
                image = image * e * self._rotation(k, sign * exponent_sign) * invert(e)
            images.append(image * e)
        return Pi1Automorphism(self.alphabet, tuple(images))


def curve_twist(surface: SurfaceKind, word: Word, boundary: Word, exponent: int = 1) -> Pi1Automorphism:
    """
    Handle-basis automorphism of t_c^exponent for the curve with handle word ``word``.

    The result must fix the outer boundary word letter for letter and the
    conjugacy class of the curve; a word that is not a simple closed curve
    fails one of the two.

    Raises:
        EvaluationError: proper power, trivial word, or a failed consistency check
    """
    curve = RibbonCurve(surface, word)
    step = curve.twist(1 if exponent > 0 else -1)
    if step.apply(boundary) != boundary:
        raise EvaluationError(f"{word} is not a simple closed curve: its twist moves the boundary")
    if conj_class(step.apply(word), True) != conj_class(word, True):
        raise EvaluationError(f"{word} is not a simple closed curve: its twist moves the curve")
    result = step
    for _ in range(abs(exponent) - 1):
        result = result.compose(step)
    logger.debug(f"Ribbon twist along {word} ({curve.n} strands), exponent {exponent}")
    return result
