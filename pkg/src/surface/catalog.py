"""
Named curve catalog: π1 words, homology, separating data, hyperelliptic
symmetry tags and the realization recipe of every curve the constructions use.
"""

import logging
from functools import lru_cache
from dataclasses import dataclass, field, replace
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from errors import CatalogError
from words import ConjClass, Word, conj_class, invert, multiply

from .model import HomologyClass, SurfaceKind, homology_of


logger = logging.getLogger(__name__)

# Involution tags. "chain" is the rotation fixing every A_i, "b-curves" the
# rotation fixing the B-curves and the central separating curve.
CHAIN_INVOLUTION = "chain"
B_CURVE_INVOLUTION = "b-curves"


@dataclass(frozen=True)
class Realization:
    """How a curve is obtained: a standard curve, or the image ``phi(base)``."""

    kind: str = "standard"
    phi: Any = None
    base: Any = None

    @property
    def is_image(self) -> bool:
        return self.kind == "image"


@dataclass(frozen=True)
class CurveSpec:
    """A named simple closed curve with its π1 and H1 data."""

    name: str
    surface: SurfaceKind
    h1: HomologyClass
    word: Optional[Word] = None
    separating: Optional[int] = None
    involutions: FrozenSet[str] = frozenset()
    realization: Realization = field(default_factory=Realization)
    twist_model: Optional[Tuple] = None

    @property
    def pi1_class(self) -> Optional[ConjClass]:
        if self.word is None:
            return None
        return conj_class(self.word, orientation_agnostic=True)

    @property
    def hyperelliptic_invariant(self) -> bool:
        return bool(self.involutions)

    @property
    def is_separating(self) -> bool:
        return self.h1.is_zero()

    def renamed(self, name: str) -> "CurveSpec":
        return replace(self, name=name)

    def same_curve(self, other: "CurveSpec") -> bool:
        """Orientation-agnostic equality: by π1 class when both words are known, else by name or ±h1."""
        if self == other:
            return True
        if self.word is not None and other.word is not None:
            return self.pi1_class == other.pi1_class
        if self.name == other.name:
            return True
        if self.realization.is_image or other.realization.is_image:
            return False
        return self.h1.up_to_sign() == other.h1.up_to_sign() and not self.h1.is_zero()


@dataclass(frozen=True)
class CurveCatalog:
    surface: SurfaceKind
    entries: Dict[str, CurveSpec]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def get(self, name: str) -> CurveSpec:
        try:
            return self.entries[name]
        except KeyError:
            raise CatalogError(f"curve '{name}' not in the genus-{self.surface.genus} catalog") from None

    def __getitem__(self, name: str) -> CurveSpec:
        return self.get(name)

    @property
    def names(self) -> List[str]:
        return list(self.entries)

    def extended(self, specs: Iterable[CurveSpec]) -> "CurveCatalog":
        entries = dict(self.entries)
        for spec in specs:
            entries[spec.name] = spec
        return CurveCatalog(self.surface, entries)

    def to_dict(self) -> Dict[str, Any]:
        curves = []
        for name in self.entries:
            spec = self.entries[name]
            curves.append({
                "name": spec.name,
                "pi1": spec.word.to_text() if spec.word is not None else None,
                "h1": list(spec.h1.coords),
                "separating": spec.separating,
                "hyperelliptic": sorted(spec.involutions),
                "realization": spec.realization.kind if not spec.realization.is_image
                else f"image({spec.realization.base.name})",
                "pi1_formula": not spec.surface.is_closed and (spec.twist_model is not None or spec.word is not None),
            })
        return {"surface": self.surface.to_dict(), "curves": curves}


def _product(surface: SurfaceKind, parts: Iterable[Word]) -> Word:
    result = Word(surface.alphabet, ())
    for part in parts:
        result = multiply(result, part)
    return result


def b_run(surface: SurfaceKind, start: int, stop: int) -> Word:
    """b_start b_{start+1} ... b_stop (empty when start > stop)."""
    return _product(surface, (surface.b(j) for j in range(start, stop + 1)))


def c_word(surface: SurfaceKind, i: int) -> Word:
    """c_i = b_i⁻¹⋯b_1⁻¹ (a_1 b_1 a_1⁻¹)⋯(a_i b_i a_i⁻¹); c_0 is empty."""
    head = invert(b_run(surface, 1, i))
    tail = _product(surface, (surface.a(j) * surface.b(j) * invert(surface.a(j)) for j in range(1, i + 1)))
    return head * tail


def a_word(surface: SurfaceKind, k: int) -> Word:
    """a_k for 1 ≤ k ≤ g; a_{g+1} is d2 on two-boundary surfaces, c_g with one boundary, trivial when closed."""
    g = surface.genus
    if k <= g:
        return surface.a(k)
    if k != g + 1:
        raise CatalogError(f"a_{k} undefined for genus {g}")
    if surface.boundary_count == 2:
        return surface.generator("d2")
    if surface.boundary_count == 1:
        return c_word(surface, g)
    return Word(surface.alphabet, ())


def boundary_word(surface: SurfaceKind) -> Word:
    """Based word of the outer boundary (the basepoint boundary)."""
    g = surface.genus
    s = b_run(surface, 1, g)
    inner = c_word(surface, g)
    if surface.boundary_count == 2:
        inner = inner * surface.generator("d2")
    return s * inner * invert(s)


def b_curve_words(surface: SurfaceKind, h: int) -> Dict[str, Word]:
    """Words of B^h_{0,1}, B^h_{0,2}, B^h_1, ..., B^h_h keyed by catalog name."""
    r = h // 2
    words = {}
    words[f"B{h}_01"] = b_run(surface, 1, h)
    words[f"B{h}_02"] = b_run(surface, 1, h) * c_word(surface, h) * a_word(surface, h + 1)
    odd_top = r + 1 if h % 2 else r
    for k in range(1, odd_top + 1):
        words[f"B{h}_{2 * k - 1}"] = (
            surface.a(k) * b_run(surface, k, h + 1 - k) * c_word(surface, h + 1 - k) * surface.a(h + 1 - k)
        )
    for k in range(1, r + 1):
        words[f"B{h}_{2 * k}"] = (
            surface.a(k) * b_run(surface, k + 1, h - k) * c_word(surface, h - k) * surface.a(h + 1 - k)
        )
    ordered = [f"B{h}_01", f"B{h}_02"] + [f"B{h}_{i}" for i in range(1, h + 1)]
    return {name: words[name] for name in ordered}


def chain_curve_word(surface: SurfaceKind, i: int) -> Word:
    """A_1 = a1, A_2 = b1, A_{2h-1} = a_{h-1} a_h⁻¹, A_{2h} = b_h."""
    if i == 1:
        return surface.a(1)
    h = (i + 1) // 2
    if i % 2 == 0:
        return surface.b(h)
    return surface.a(h - 1) * invert(surface.a(h))


def standard_curve(surface: SurfaceKind, name: str, word: Word, *, separating: Optional[int] = None,
                   involutions: Iterable[str] = (), twist_model: Optional[Tuple] = None) -> CurveSpec:
    h1 = homology_of(surface, word)
    if separating is None and h1.is_zero() and word.codes:
        raise CatalogError(f"curve {name} is null-homologous but has no genus split")
    return CurveSpec(
        name=name,
        surface=surface,
        h1=h1,
        word=word,
        separating=separating,
        involutions=frozenset(involutions),
        twist_model=None if surface.is_closed else twist_model,
    )


def build_catalog(surface: SurfaceKind) -> CurveCatalog:
    """
    Build the named curve catalog for a surface.

    Contains a_k, b_k, c_k, the primed curves a'_k, the chain A_1..A_{2g},
    the B-curve families for every h ≤ g and the boundary curves. Curves
    with a closed-form π1 twist carry a twist model; the others are twisted
    from their word. The lantern curves e1, e2 are added by the
    constructions layer.
    """
    g = surface.genus
    entries: Dict[str, CurveSpec] = {}

    def add(spec: CurveSpec) -> None:
        entries[spec.name] = spec

    for j in range(1, g + 1):
        chain_tag = [CHAIN_INVOLUTION] if j == 1 else []
        add(standard_curve(surface, f"a{j}", surface.a(j), involutions=chain_tag, twist_model=("x", j)))
        add(standard_curve(surface, f"b{j}", surface.b(j), involutions=[CHAIN_INVOLUTION],
                           twist_model=("y", j)))
    for j in range(1, g + 1):
        add(standard_curve(surface, f"c{j}", c_word(surface, j), separating=j,
                           involutions=[CHAIN_INVOLUTION, B_CURVE_INVOLUTION], twist_model=("sep", j)))

    if surface.boundary_count == 1:
        add(standard_curve(surface, f"a{g + 1}", a_word(surface, g + 1), separating=g, twist_model=("sep", g)))
    elif surface.boundary_count == 2:
        add(standard_curve(surface, f"a{g + 1}", a_word(surface, g + 1), twist_model=("inner",)))

    for k in range(1, g + 1):
        model = ("x", 1) if k == 1 else None
        add(standard_curve(surface, f"a{k}'", c_word(surface, k - 1) * surface.a(k), twist_model=model))
    if surface.boundary_count == 2:
        add(standard_curve(surface, f"a{g + 1}'", c_word(surface, g) * a_word(surface, g + 1),
                           twist_model=("outer",)))

    for i in range(1, 2 * g + 1):
        if i == 1:
            model = ("x", 1)
        elif i % 2 == 0:
            model = ("y", i // 2)
        else:
            model = None
        add(standard_curve(surface, f"A{i}", chain_curve_word(surface, i), involutions=[CHAIN_INVOLUTION],
                           twist_model=model))

    for h in range(1, g + 1):
        for name, word in b_curve_words(surface, h).items():
            add(standard_curve(surface, name, word, involutions=[B_CURVE_INVOLUTION]))

    logger.debug(f"Built catalog with {len(entries)} curves for {surface}")
    return CurveCatalog(surface, entries)


def project_to_closed(curve: CurveSpec, closed: CurveCatalog) -> CurveSpec:
    """
    Reinterpret a bordered-surface curve on the closed surface of the same genus.

    Standard curves resolve by name; image curves keep their lineage and get
    their word and homology with the d2 generator capped off.
    """
    if curve.surface.is_closed:
        return curve
    if not curve.realization.is_image and curve.name in closed:
        return closed.get(curve.name)
    target = closed.surface
    rank = target.dimension
    word = None
    if curve.word is not None:
        word = Word(target.alphabet, tuple(c for c in curve.word.codes if abs(c) <= rank))
    return CurveSpec(
        name=curve.name,
        surface=target,
        h1=HomologyClass(target, curve.h1.coords[:rank]),
        word=word,
        separating=curve.separating,
        involutions=curve.involutions,
        realization=curve.realization,
        twist_model=None,
    )


@lru_cache(maxsize=None)
def catalog_for(surface: SurfaceKind) -> CurveCatalog:
    """Shared immutable catalog per surface."""
    return build_catalog(surface)


def image_curve(name: str, base: CurveSpec, phi: Any, h1: HomologyClass, word: Optional[Word],
                involutions: Iterable[str] = ()) -> CurveSpec:
    """A curve realized as ``phi(base)``; homology and word are supplied by the evaluator."""
    return CurveSpec(
        name=name,
        surface=base.surface,
        h1=h1,
        word=word,
        separating=base.separating,
        involutions=frozenset(involutions),
        realization=Realization("image", phi, base),
        twist_model=None,
    )
