"""
Hurwitz moves, conjugations and relator substitutions on factorizations.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from errors import MoveError
from mcg import Evaluator, Level, MappingClass, apply_matrix
from mcg.homology import matrices_equal
from relators import Relator
from surface import CurveSpec, catalog_for, project_to_closed
from words import conj_class

from .model import Factorization, MoveRecord


LEFT = "left"
RIGHT = "right"


class MoveEngine:
    """
    Applies the rewriting moves and keeps every result checked.

    Each move is verified locally at L1 (the rewritten block has the same
    H1 action). Claims that a twist or a conjugating map fixes a curve are
    checked on π1 words, and refused when L2 is unavailable; substitutions
    re-verify their relator first.
    """

    def __init__(self, evaluator: Evaluator, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the MoveEngine.

        Args:
            evaluator: shared evaluator (caches are reused across moves)
            config: engine configuration; ``check_moves`` toggles the local L1 checks
        """
        config = config or {}
        self.evaluator = evaluator
        self.check_moves = config.get("check_moves", True)
        self.verify_level = Level(config.get("default_level", "L2"))

        self.logger = logging.getLogger(self.__class__.__name__)

        # Statistics
        self.move_count = 0
        self.substitution_count = 0

    # --- helpers -----------------------------------------------------------

    def _block_matrix(self, surface, curves: Sequence[CurveSpec]):
        return self.evaluator.homology_matrix(MappingClass.positive(surface, tuple(curves)))

    def _check_block(self, surface, before: Sequence[CurveSpec], after: Sequence[CurveSpec], what: str) -> None:
        if not self.check_moves:
            return
        if not matrices_equal(self._block_matrix(surface, before), self._block_matrix(surface, after)):
            self.logger.error(f"{what}: H1 action changed")
            raise MoveError(f"{what} changed the product at L1")

    def identify(self, computed: CurveSpec, claimed: CurveSpec) -> CurveSpec:
        """
        Replace a computed curve by a known one, checking the claim.

        The homology classes must agree up to sign; when both π1 words are
        known their conjugacy classes must agree as well.
        """
        if computed.h1.up_to_sign() != claimed.h1.up_to_sign():
            raise MoveError(f"{computed.name} is not {claimed.name}: homology {computed.h1.coords} vs {claimed.h1.coords}")
        if computed.word is not None and claimed.word is not None:
            if conj_class(computed.word, True) != conj_class(claimed.word, True):
                raise MoveError(f"{computed.name} is not {claimed.name}: π1 classes differ")
        return claimed

    def require_fixed(self, phi: MappingClass, curve: CurveSpec, what: str) -> None:
        """
        Check that φ fixes ``curve`` as a free homotopy class.

        Raises:
            MoveError: φ moves the curve, or no π1 word of φ(curve) can be computed
        """
        if phi.is_empty():
            return
        moved = self.evaluator.apply_to_class(phi, curve.h1)
        if moved.up_to_sign() != curve.h1.up_to_sign():
            raise MoveError(f"{what} moves {curve.name} in H1")
        word = self.evaluator.image_word(phi, curve)
        if word is None:
            raise MoveError(f"{what}: L2 unavailable for {curve.name}, cannot confirm it is fixed")
        if conj_class(word, True) != curve.pi1_class:
            raise MoveError(f"{what} moves {curve.name} in π1")

    def _matches(self, cycle: CurveSpec, target: CurveSpec) -> bool:
        return cycle.same_curve(target)

    # --- elementary transformations ------------------------------------------

    def elementary_transformation(self, f: Factorization, i: int, direction: str,
                                  identify: Optional[CurveSpec] = None) -> Factorization:
        """
        Hurwitz move on the adjacent pair at positions i, i+1 (0-based).

        ``right``: (t_v, t_w) → (t_{t_v(w)}, t_v), so v moves right unchanged.
        ``left``:  (t_v, t_w) → (t_w, t_{t_w⁻¹(v)}), so w moves left unchanged.

        Args:
            f: factorization
            i: index of the left slot of the pair
            direction: ``left`` or ``right``
            identify: known curve the newly computed slot is claimed to equal

        Returns:
            New factorization with one more trace record
        """
        if not 0 <= i < len(f) - 1:
            raise MoveError(f"pair index {i} out of range for {len(f)} cycles")
        v, w = f.cycles[i], f.cycles[i + 1]
        if direction == RIGHT:
            moved = self.evaluator.image(MappingClass(f.surface, ((v, 1),)), w)
            if identify is not None:
                moved = self.identify(moved, identify)
            pair = (moved, v)
        elif direction == LEFT:
            moved = self.evaluator.image(MappingClass(f.surface, ((w, -1),)), v,
                                         name=f"t_{w.name}^-1({v.name})")
            if identify is not None:
                moved = self.identify(moved, identify)
            pair = (w, moved)
        else:
            raise MoveError(f"direction must be '{LEFT}' or '{RIGHT}', got '{direction}'")

        self._check_block(f.surface, (v, w), pair, f"elementary transformation at {i}")
        self.move_count += 1
        record = MoveRecord("elementary", i, detail=direction)
        return f.with_cycles(f.cycles[:i] + pair + f.cycles[i + 2:], record)

    def commute(self, f: Factorization, i: int) -> Factorization:
        """
        Swap an adjacent pair of disjoint curves.

        t_v t_w = t_w t_v exactly when t_v(w) = w, which is checked on π1
        words; the move is refused when L2 is unavailable.
        """
        if not 0 <= i < len(f) - 1:
            raise MoveError(f"pair index {i} out of range for {len(f)} cycles")
        v, w = f.cycles[i], f.cycles[i + 1]
        if v == w:
            return f
        self.require_fixed(MappingClass(f.surface, ((v, 1),)), w, f"commute at {i}: t_{v.name}")
        self._check_block(f.surface, (v, w), (w, v), f"commute at {i}")
        self.move_count += 1
        record = MoveRecord("elementary", i, detail="commute")
        return f.with_cycles(f.cycles[:i] + (w, v) + f.cycles[i + 2:], record)

    def braid_shuffle(self, f: Factorization, i: int) -> Factorization:
        """
        Rewrite (a, b, a) at i..i+2 to (b, a, b) for curves meeting once.

        Two right moves give (t_a t_b(a), a, b) and t_a t_b(a) = b.
        """
        a, b, a_again = f.cycles[i:i + 3]
        if a_again != a:
            raise MoveError(f"braid shuffle needs (a, b, a) at {i}, found {[c.name for c in f.cycles[i:i + 3]]}")
        f = self.elementary_transformation(f, i + 1, RIGHT)
        return self.elementary_transformation(f, i, RIGHT, identify=b)

    def push_twist(self, f: Factorization, i: int, to: Optional[int] = None) -> Factorization:
        """
        Move cycle i to position ``to`` (default: the right end) by elementary transformations.

        Moving right keeps the pushed twist t_c and replaces each passed
        cycle v by t_c(v); moving left replaces passed cycles by t_c⁻¹(v).
        """
        if not 0 <= i < len(f):
            raise MoveError(f"cycle index {i} out of range for {len(f)} cycles")
        target = len(f) - 1 if to is None else to
        if not 0 <= target < len(f):
            raise MoveError(f"target index {target} out of range for {len(f)} cycles")
        pushed = f.cycles[i].name
        position = i
        while position < target:
            f = self.elementary_transformation(f, position, RIGHT)
            position += 1
        while position > target:
            f = self.elementary_transformation(f, position - 1, LEFT)
            position -= 1
        self.logger.debug(f"Pushed {pushed} from {i} to {target}")
        return f

    # --- conjugations ----------------------------------------------------------

    def _images(self, phi: MappingClass, curves: Iterable[CurveSpec],
                identify: Optional[Dict[str, CurveSpec]] = None,
                names: Optional[Dict[str, str]] = None) -> List[CurveSpec]:
        identify = identify or {}
        names = names or {}
        images = []
        for curve in curves:
            image = self.evaluator.image(phi, curve, name=names.get(curve.name))
            if curve.name in identify:
                image = self.identify(image, identify[curve.name])
            images.append(image)
        return images

    def simultaneous_conjugation(self, f: Factorization, phi: MappingClass,
                                 label: Optional[str] = None) -> Factorization:
        """Replace every cycle v by φ(v); boundary exponents are unchanged."""
        images = self._images(phi, f.cycles, names={c.name: f"{label or 'phi'}({c.name})" for c in f.cycles})
        record = MoveRecord("conjugation", 0, phi=label or phi.describe())
        self.move_count += 1
        return f.with_cycles(images, record)

    def partial_conjugation(self, f: Factorization, segments: Sequence[Tuple[int, int]], phi: MappingClass,
                            label: Optional[str] = None,
                            identify: Optional[Dict[str, CurveSpec]] = None) -> Factorization:
        """
        Conjugate the cycles in the half-open ``segments`` by φ.

        φ must fix every cycle outside the segments as a π1 class, so it
        commutes with the complementary product; the total product is
        re-checked at L1 afterwards.

        Args:
            f: factorization
            segments: list of (start, stop) index ranges
            phi: conjugating mapping class
            label: display name of φ used for image names
            identify: base-curve name → known curve its image equals
        """
        label = label or "phi"
        inside = set()
        for start, stop in segments:
            if not 0 <= start <= stop <= len(f):
                raise MoveError(f"segment ({start}, {stop}) out of range for {len(f)} cycles")
            inside.update(range(start, stop))
        for index, curve in enumerate(f.cycles):
            if index not in inside:
                self.require_fixed(phi, curve, f"{label} (complementary cycle at {index})")

        cycles = list(f.cycles)
        for start, stop in segments:
            names = {c.name: f"{label}({c.name})" for c in cycles[start:stop]}
            cycles[start:stop] = self._images(phi, cycles[start:stop], identify, names)
        self._check_block(f.surface, f.cycles, cycles, f"partial conjugation by {label}")
        self.move_count += 1
        record = MoveRecord(
            "partial_conjugation",
            segments[0][0] if segments else 0,
            phi=label,
            detail=",".join(f"{start}:{stop}" for start, stop in segments),
        )
        return f.with_cycles(cycles, record)

    # --- substitution ---------------------------------------------------------

    def substitute(self, f: Factorization, at: int, relator: Relator,
                   phi: Optional[MappingClass] = None, label: Optional[str] = None,
                   identify: Optional[Dict[str, CurveSpec]] = None) -> Factorization:
        """
        R^φ-substitution: replace t_{d_1}⋯t_{d_l} at ``at`` by t_{φ(v_1)}⋯t_{φ(v_k)}.

        Raises:
            MoveError: subword mismatch, φ moves some d_i, or L2 is unavailable to check it
            RelatorError: the relator fails verification
        """
        phi = phi if phi is not None else MappingClass.identity(f.surface)
        relator.verify(self.evaluator, self.verify_level)
        count = len(relator.negative)
        if not 0 <= at <= len(f) - count:
            raise MoveError(f"substitution window at {at} of width {count} exceeds {len(f)} cycles")
        window = f.cycles[at:at + count]
        for offset, (cycle, d) in enumerate(zip(window, relator.negative)):
            if not self._matches(cycle, d):
                raise MoveError(
                    f"{relator.label} expects {d.name} at position {at + offset}, found {cycle.name}"
                )
            self.require_fixed(phi, d, label or phi.describe())

        names = None if label is None else {v.name: f"{label}({v.name})" for v in relator.positive}
        replacement = self._images(phi, relator.positive, identify, names)
        cycles = f.cycles[:at] + tuple(replacement) + f.cycles[at + count:]
        self.substitution_count += 1
        record = MoveRecord(
            "substitution",
            at,
            relator=relator.label,
            phi=label if label is not None else (None if phi.is_empty() else phi.describe()),
            sigma_delta=relator.sigma_delta,
            cycle_delta=len(replacement) - count,
        )
        self.logger.info(
            f"{relator.label}{'^' + label if label else ''}-substitution at {at}: {len(f)} -> {len(cycles)} cycles"
        )
        return f.with_cycles(cycles, record)

    def find_window(self, f: Factorization, targets: Sequence[CurveSpec], start: int = 0) -> int:
        """First index ≥ start where ``targets`` occur consecutively."""
        width = len(targets)
        for at in range(start, len(f) - width + 1):
            if all(self._matches(f.cycles[at + j], targets[j]) for j in range(width)):
                return at
        raise MoveError(f"subword {[t.name for t in targets]} not found after {start}")

    # --- boundary ---------------------------------------------------------------

    def close_up(self, f: Factorization) -> Factorization:
        """
        Reinterpret the cycles on the closed surface of the same genus.

        Boundary exponents are carried along; each component with exponent 1
        yields a (−1)-section of the closed fibration.
        """
        if f.surface.is_closed:
            return f
        closed = catalog_for(f.surface.closed())
        cycles = tuple(project_to_closed(curve, closed) for curve in f.cycles)
        record = MoveRecord("close_up", 0, detail=f"sections={sections(f)}")
        self.logger.info(f"Closed up {len(cycles)} cycles from {f.surface} with exponents {f.boundary_exponents}")
        return Factorization(closed.surface, cycles, f.boundary_exponents, f.trace + (record,))

    def check_lift(self, f: Factorization, level: Level = Level.L1):
        """Verdict for product = ∏ t_δ^k (closed surfaces: product = 1)."""
        if f.surface.is_closed:
            return self.evaluator.is_identity(f.product(), Level.L1)
        return self.evaluator.is_identity(f.relator_word(), level)

    def same_product(self, before: Factorization, after: Factorization) -> bool:
        left = self.evaluator.homology_matrix(before.product())
        right = self.evaluator.homology_matrix(after.product())
        return matrices_equal(left, right)


def sections(f: Factorization) -> List[int]:
    """Self-intersections of the sections supplied by boundary components with exponent 1."""
    return [-k for k in f.boundary_exponents if k == 1]


def h1_multiset(f: Factorization) -> List[Tuple[int, ...]]:
    return sorted(curve.h1.up_to_sign() for curve in f.cycles)


def conjugated_multiset(evaluator: Evaluator, f: Factorization, phi: MappingClass) -> List[Tuple[int, ...]]:
    matrix = evaluator.homology_matrix(phi)
    return sorted(apply_matrix(matrix, curve.h1).up_to_sign() for curve in f.cycles)


__all__ = [
    "LEFT",
    "RIGHT",
    "MoveEngine",
    "sections",
    "h1_multiset",
    "conjugated_multiset",
]
