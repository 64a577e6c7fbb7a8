"""
Numerical invariants of Lefschetz fibrations over the sphere.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from errors import SignatureError
from factorization import Factorization, sections


logger = logging.getLogger(__name__)

HYPERELLIPTIC = "Hyperelliptic"
LEDGER = "SubstitutionLedger"
BOTH = "Both"
UNAVAILABLE = "Unavailable"

INDECOMPOSABLE_NOTE = "fiber-sum indecomposable: the fibration admits a (-1)-section"


def rational(value: Fraction) -> Dict[str, int]:
    """Exact JSON form {num, den}."""
    return {"num": value.numerator, "den": value.denominator}


def euler(f: Factorization) -> int:
    """e(X) = 4 - 4g + (number of singular fibers)."""
    return 4 - 4 * f.surface.genus + len(f)


def split_counts(f: Factorization) -> Tuple[int, Dict[int, int]]:
    """
    Nonseparating cycle count and s_h, the separating cycles bounding genus h ≤ g/2.

    Raises:
        SignatureError: a separating cycle with no genus split, or bounding a disk
    """
    g = f.surface.genus
    nonseparating = 0
    splits: Dict[int, int] = {}
    for curve in f.cycles:
        if not curve.h1.is_zero():
            nonseparating += 1
            continue
        if curve.separating is None:
            raise SignatureError(f"separating cycle {curve.name} has no genus split")
        h = min(curve.separating, g - curve.separating)
        if h == 0:
            raise SignatureError(f"cycle {curve.name} bounds a disk")
        splits[h] = splits.get(h, 0) + 1
    return nonseparating, dict(sorted(splits.items()))


def signature_hyperelliptic(f: Factorization) -> int:
    """
    σ = -(g+1)/(2g+1)·n + Σ_h (4h(g-h)/(2g+1) - 1)·s_h for a hyperelliptic factorization.

    Raises:
        SignatureError: the cycles share no hyperelliptic involution, or the result is not an integer
    """
    g = f.surface.genus
    if f.cycles:
        common = frozenset.intersection(*(curve.involutions for curve in f.cycles))
        if not common:
            raise SignatureError("cycles are not invariant under a common hyperelliptic involution")
    n, splits = split_counts(f)
    sigma = Fraction(-(g + 1), 2 * g + 1) * n
    for h, count in splits.items():
        sigma += (Fraction(4 * h * (g - h), 2 * g + 1) - 1) * count
    if sigma.denominator != 1:
        raise SignatureError(f"hyperelliptic signature {sigma} is not an integer")
    return int(sigma)


def signature_ledger(base: Factorization, f: Factorization) -> int:
    """
    σ(base) plus the signature deltas recorded along the trace of ``f``.

    Raises:
        SignatureError: some move has no known delta, or σ(base) is unavailable
    """
    delta = f.sigma_delta_total
    if delta is None:
        unknown = next(move for move in f.trace if move.sigma_delta is None)
        raise SignatureError(f"trace contains {unknown.relator or unknown.kind} with no signature delta")
    return signature_hyperelliptic(base) + delta


def chern_numbers(sigma: int, e: int) -> Tuple[int, int]:
    """(K², χ_h) = (3σ + 2e, (σ + e)/4)."""
    if (sigma + e) % 4:
        raise SignatureError(f"σ + e = {sigma + e} is not divisible by 4")
    return 3 * sigma + 2 * e, (sigma + e) // 4


def slope(sigma: int, e: int, g: int, base_genus: int = 0) -> Tuple[Fraction, bool]:
    """
    λ = (K² - 8(g-1)(k-1)) / (χ_h - (g-1)(k-1)) and whether λ < 4 - 4/g.

    Raises:
        SignatureError: zero denominator
    """
    k2, chi = chern_numbers(sigma, e)
    shift = (g - 1) * (base_genus - 1)
    denominator = chi - shift
    if denominator == 0:
        raise SignatureError("slope denominator χ_h - (g-1)(k-1) vanishes")
    value = Fraction(k2 - 8 * shift, denominator)
    return value, value < 4 - Fraction(4, g)


@dataclass
class InvariantReport:
    g: int
    n_cycles: int
    n_nonseparating: int
    splits: Dict[int, int]
    e: int
    sigma: Optional[int]
    sigma_method: str
    k2: Optional[int] = None
    chi_h: Optional[int] = None
    slope: Optional[Fraction] = None
    slope_violation: Optional[bool] = None
    sections: int = 0
    pi1_obstruction: Optional[bool] = None
    h1: Optional[Any] = None
    annotations: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation (rationals as {num, den})."""
        return {
            "g": self.g,
            "n_cycles": self.n_cycles,
            "n_nonseparating": self.n_nonseparating,
            "s_h": {str(h): count for h, count in self.splits.items()},
            "e": self.e,
            "sigma": self.sigma,
            "sigma_method": self.sigma_method,
            "K2": self.k2,
            "chi_h": self.chi_h,
            "lambda": rational(self.slope) if self.slope is not None else None,
            "slope_violation": self.slope_violation,
            "sections": self.sections,
            "nonholomorphic_flags": {
                "slope": bool(self.slope_violation),
                "pi1_obstruction": bool(self.pi1_obstruction),
            },
            "h1": self.h1.to_dict() if self.h1 is not None else None,
            "annotations": list(self.annotations),
        }


def _try(method, *args) -> Optional[int]:
    try:
        return method(*args)
    except SignatureError as e:
        logger.debug(f"{method.__name__} not applicable: {e}")
        return None


def invariant_report(f: Factorization, base: Optional[Factorization] = None, h1=None) -> InvariantReport:
    """
    All invariants of a closed factorization.

    Both signature methods run when they apply and must agree; the ledger
    needs the base relator ``f`` was derived from.

    Args:
        f: closed (or bordered lift of a) factorization
        base: factorization the trace of ``f`` starts from
        h1: AbelianInvariants of the total space, sets the π1 obstruction flag

    Raises:
        SignatureError: the two signature methods disagree
    """
    g = f.surface.genus
    e = euler(f)
    n, splits = split_counts(f)
    by_formula = _try(signature_hyperelliptic, f)
    by_ledger = _try(signature_ledger, base, f) if base is not None else None
    if by_formula is not None and by_ledger is not None:
        if by_formula != by_ledger:
            logger.error(f"Signature mismatch: formula {by_formula}, ledger {by_ledger}")
            raise SignatureError(f"signature methods disagree: {by_formula} vs {by_ledger}")
        sigma, method = by_formula, BOTH
    elif by_formula is not None:
        sigma, method = by_formula, HYPERELLIPTIC
    elif by_ledger is not None:
        sigma, method = by_ledger, LEDGER
    else:
        sigma, method = None, UNAVAILABLE

    report = InvariantReport(g=g, n_cycles=len(f), n_nonseparating=n, splits=splits, e=e, sigma=sigma,
                             sigma_method=method, sections=len(sections(f)), h1=h1)
    if sigma is not None:
        report.k2, report.chi_h = chern_numbers(sigma, e)
        report.slope, report.slope_violation = slope(sigma, e, g)
    if h1 is not None:
        report.pi1_obstruction = h1.is_z_plus_cyclic()
    if report.sections:
        report.annotations.append(INDECOMPOSABLE_NOTE)
    return report


def full_report(pipeline, h1=None) -> InvariantReport:
    """Invariant report of a construction's final factorization against its base relator."""
    return invariant_report(pipeline.final, pipeline.base, h1)
