"""
Constructors for the braid, chain, lantern and W relators and their signature deltas.
"""

import logging
from typing import Optional, Sequence

from errors import CatalogError, RelatorError
from surface import CurveCatalog, CurveSpec, SurfaceKind, build_catalog, intersection, project_to_closed

from .relator import (
    BRAID,
    CHAIN_EVEN,
    CHAIN_ODD,
    DERIVED,
    LANTERN,
    MCK,
    W_RELATOR,
    Relator,
)


logger = logging.getLogger(__name__)

DISJOINT = "disjoint"
ONCE = "once"


def sigma_delta(kind: str, h: Optional[int] = None, inverted: bool = False) -> Optional[int]:
    """
    Signature change of one substitution by a relator of the given kind.

    Braid 0, lantern +1, odd chain C_{2h+1} +2h(h+2); inverses negate.
    Other kinds carry no bookkeeping and return None.
    """
    if kind == BRAID:
        delta = 0
    elif kind == LANTERN:
        delta = 1
    elif kind == CHAIN_ODD:
        if h is None:
            raise RelatorError("odd chain delta needs h")
        delta = 2 * h * (h + 2)
    else:
        return None
    return -delta if inverted else delta


def braid(alpha: CurveSpec, beta: CurveSpec, kind: str) -> Relator:
    """
    Braid relator of two curves meeting zero times or once.

    Args:
        alpha: first curve
        beta: second curve
        kind: ``disjoint`` for t_α t_β t_α⁻¹ t_β⁻¹, ``once`` for t_α t_β t_α t_β⁻¹ t_α⁻¹ t_β⁻¹

    Raises:
        RelatorError: when the algebraic intersection contradicts ``kind``
    """
    pairing = abs(intersection(alpha.h1, beta.h1))
    if kind == DISJOINT:
        if pairing != 0:
            raise RelatorError(f"{alpha.name} and {beta.name} pair to {pairing}; cannot be disjoint")
        positive, negative = (alpha, beta), (beta, alpha)
    elif kind == ONCE:
        if pairing != 1:
            raise RelatorError(f"{alpha.name} and {beta.name} pair to {pairing}; cannot meet once")
        positive, negative = (alpha, beta, alpha), (beta, alpha, beta)
    else:
        raise RelatorError(f"unknown braid kind '{kind}'")
    return Relator(BRAID, alpha.surface, positive, negative, tag="B", sigma_delta=0)


def check_chain(curves: Sequence[CurveSpec]) -> None:
    for i, left in enumerate(curves):
        for j in range(i + 1, len(curves)):
            pairing = abs(intersection(left.h1, curves[j].h1))
            expected = 1 if j == i + 1 else 0
            if pairing != expected:
                raise RelatorError(
                    f"chain pattern violated: |<{left.name}, {curves[j].name}>| = {pairing}, expected {expected}"
                )


def _null_homotopic(curve: CurveSpec) -> bool:
    if curve.word is not None:
        return curve.word.is_identity()
    return curve.h1.is_zero() and not curve.separating


def chain(curves: Sequence[CurveSpec], boundary: Sequence[CurveSpec]) -> Relator:
    """
    Chain relator (t_{α_1}⋯t_{α_n})^e · t_{d_l}⁻¹⋯t_{d_1}⁻¹.

    n = 2h gives exponent 4h+2 and one boundary curve; n = 2h+1 gives
    exponent 2h+2 and two boundary curves (d_1, d_2).
    """
    curves = tuple(curves)
    boundary = tuple(boundary)
    if not curves:
        raise RelatorError("chain needs at least one curve")
    check_chain(curves)
    n = len(curves)
    h = n // 2
    surface = curves[0].surface
    if n % 2 == 0:
        if len(boundary) != 1:
            raise RelatorError(f"even chain of length {n} has one boundary curve, got {len(boundary)}")
        return Relator(CHAIN_EVEN, surface, curves * (4 * h + 2), boundary, tag=f"C_{n}", h=h)
    if len(boundary) != 2:
        raise RelatorError(f"odd chain of length {n} has two boundary curves, got {len(boundary)}")
    if any(_null_homotopic(d) for d in boundary):
        raise RelatorError("odd chain boundary curves must not be null-homotopic")
    return Relator(CHAIN_ODD, surface, curves * (2 * h + 2), boundary, tag=f"C_{n}", h=h,
                   sigma_delta=sigma_delta(CHAIN_ODD, h))


def chain_curves(catalog: CurveCatalog, n: int) -> list:
    return [catalog.get(f"A{i}") for i in range(1, n + 1)]


def even_chain(catalog: CurveCatalog) -> Relator:
    """C_{2g} = (t_{A_1}⋯t_{A_{2g}})^{4g+2} t_{a_{g+1}}⁻¹ on a one-boundary surface."""
    g = catalog.surface.genus
    if catalog.surface.boundary_count != 1:
        raise CatalogError("the even chain C_2g is built on the one-boundary surface")
    return chain(chain_curves(catalog, 2 * g), [catalog.get(f"a{g + 1}")])


def odd_chain(catalog: CurveCatalog, k: int) -> Relator:
    """C_{2k-1} = (t_{A_1}⋯t_{A_{2k-1}})^{2k} t_{a'_k}⁻¹ t_{a_k}⁻¹, boundary pair (a_k, a'_k)."""
    return chain(chain_curves(catalog, 2 * k - 1), [catalog.get(f"a{k}"), catalog.get(f"a{k}'")])


def lantern(interior: Sequence[CurveSpec], boundary: Sequence[CurveSpec]) -> Relator:
    """
    Lantern relator t_{x_1}t_{x_2}t_{x_3} · t_{b_1}⁻¹t_{b_2}⁻¹t_{b_3}⁻¹t_{b_4}⁻¹.

    Args:
        interior: the three interior curves in product order
        boundary: the four boundary curves in the order their inverse twists are written
    """
    if len(interior) != 3 or len(boundary) != 4:
        raise RelatorError("lantern needs three interior and four boundary curves")
    surface = interior[0].surface
    return Relator(LANTERN, surface, tuple(interior), tuple(reversed(boundary)), tag="L",
                   sigma_delta=sigma_delta(LANTERN))


def w_block(catalog: CurveCatalog, s: int, h: int) -> list:
    """One half of W_{s,h}: B^h_{0,s}, B^h_1..B^h_h followed by t_{c_r} or t²_{a_{r+1}}t²_{a'_{r+1}}."""
    r = h // 2
    block = [catalog.get(f"B{h}_0{s}")] + [catalog.get(f"B{h}_{i}") for i in range(1, h + 1)]
    if h % 2 == 0:
        block.append(catalog.get(f"c{r}"))
    else:
        a, a_prime = catalog.get(f"a{r + 1}"), catalog.get(f"a{r + 1}'")
        block.extend([a, a, a_prime, a_prime])
    return block


def w_relator(catalog: CurveCatalog, s: int, h: int) -> Relator:
    """
    W_{1,h} (negative part t_{c_h}⁻¹) or W_{2,h} (negative part t_{a_{h+1}}⁻¹t_{a'_{h+1}}⁻¹) on Σ_g^2.
    """
    surface = catalog.surface
    g = surface.genus
    if s not in (1, 2):
        raise RelatorError(f"W relator index s must be 1 or 2, got {s}")
    if surface.boundary_count != 2:
        raise CatalogError("W relators live on the two-boundary surface")
    if not 1 <= h <= g or g < 2:
        raise RelatorError(f"W_{{{s},{h}}} needs 1 <= h <= g and g >= 2 (g={g})")
    positive = w_block(catalog, s, h) * 2
    if s == 1:
        negative = (catalog.get(f"c{h}"),)
    else:
        negative = (catalog.get(f"a{h + 1}"), catalog.get(f"a{h + 1}'"))
    return Relator(W_RELATOR, surface, tuple(positive), negative, tag=f"W_{s},{h}", h=h)


def mck(g: int) -> Relator:
    """The positive relator of the closed genus-g surface obtained by capping W_{2,g}."""
    bordered = build_catalog(SurfaceKind(g, 2))
    closed = build_catalog(SurfaceKind(g, 0))
    w = w_relator(bordered, 2, g)
    positive = tuple(project_to_closed(curve, closed) for curve in w.positive)
    return Relator(MCK, closed.surface, positive, (), tag=f"MCK_{g}", h=g)


def derived(positive: Sequence[CurveSpec], negative: Sequence[CurveSpec], tag: str,
            sigma: Optional[int] = None) -> Relator:
    """A relator assembled by the caller, e.g. a factorization against its boundary twists."""
    curves = list(positive) or list(negative)
    if not curves:
        raise RelatorError("derived relator needs at least one curve")
    return Relator(DERIVED, curves[0].surface, tuple(positive), tuple(negative), tag=tag, sigma_delta=sigma)


def sigma_delta_for_label(label: str) -> Optional[int]:
    """Re-derive the signature delta of a substitution from its relator label (``L^-1``, ``C_5``, ...)."""
    inverted = label.endswith("^-1")
    tag = label[:-3] if inverted else label
    if tag == "B":
        return sigma_delta(BRAID, inverted=inverted)
    if tag == "L":
        return sigma_delta(LANTERN, inverted=inverted)
    if tag.startswith("C_") and tag[2:].isdigit():
        n = int(tag[2:])
        if n % 2:
            return sigma_delta(CHAIN_ODD, n // 2, inverted)
    return None
