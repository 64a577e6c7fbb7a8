"""
The ``monodromy/1`` factorization document.

A document stores the bordered lift of a factorization: a curve table in
dependency order (image curves name their base and twist word), the cycle
names, boundary exponents and the move trace. ``closed: true`` marks a
document that denotes the closed-up factorization. Image curves are
re-derived on load; stored homology only has to agree.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from constructions import PipelineReport, TrivialityWitness
from errors import CatalogError, MonodromyError, SchemaError
from factorization import Factorization, MoveRecord, sections
from mcg import Evaluator, MappingClass
from relators import sigma_delta_for_label
from surface import CurveSpec, SurfaceKind, catalog_for, project_to_closed, standard_curve
from words import conj_class, parse_word


logger = logging.getLogger(__name__)

SCHEMA = "monodromy/1"
CORE_KEYS = ("schema", "surface", "closed", "boundary_exponents", "curves", "cycles", "trace", "base", "witness")


@dataclass
class FactorizationDocument:
    """A loaded (or about to be written) document."""

    lift: Factorization
    closed: bool = False
    base: Optional[Factorization] = None
    witness: Optional[TrivialityWitness] = None
    curves: List[CurveSpec] = field(default_factory=list)
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def factorization(self) -> Factorization:
        """The factorization the document denotes (closed-up when ``closed``)."""
        if not self.closed or self.lift.surface.is_closed:
            return self.lift
        return closed_factorization(self.lift)


def closed_factorization(lift: Factorization) -> Factorization:
    """The lift read on the closed surface, with the same close_up record the move engine writes."""
    closed = catalog_for(lift.surface.closed())
    cycles = tuple(project_to_closed(curve, closed) for curve in lift.cycles)
    record = MoveRecord("close_up", 0, detail=f"sections={sections(lift)}")
    return Factorization(closed.surface, cycles, lift.boundary_exponents, lift.trace + (record,))



def pipeline_document(pipeline: PipelineReport, extras: Optional[Dict[str, Any]] = None) -> FactorizationDocument:
    """Document of a construction: its bordered lift, closed base relator and π1 witness."""
    return FactorizationDocument(
        lift=pipeline.lift,
        closed=pipeline.final.surface.is_closed,
        base=pipeline.base,
        witness=pipeline.witness,
        extras=dict(extras or {}),
    )

# --- writing -----------------------------------------------------------------

def _collect(curve: CurveSpec, seen: Dict[CurveSpec, CurveSpec]) -> None:
    if curve in seen:
        return
    if curve.realization.is_image:
        _collect(curve.realization.base, seen)
        for twisted, _ in curve.realization.phi.twists:
            _collect(twisted, seen)
    seen[curve] = curve


def curve_table(groups) -> List[CurveSpec]:
    """Every curve referenced by the given curve sequences, dependencies first."""
    seen: Dict[CurveSpec, CurveSpec] = {}
    for curves in groups:
        for curve in curves:
            _collect(curve, seen)
    return list(seen.values())


def _curve_entry(curve: CurveSpec, names: Dict[CurveSpec, str]) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"name": names[curve]}
    if curve.realization.is_image:
        entry["realization"] = {
            "kind": "image",
            "base": names[curve.realization.base],
            "phi": [{"curve": names[c], "exponent": k} for c, k in curve.realization.phi.twists],
        }
    else:
        entry["realization"] = {"kind": "standard"}
    entry["h1"] = list(curve.h1.coords)
    entry["pi1"] = curve.word.to_text() if curve.word is not None else None
    entry["separating"] = curve.separating
    return entry


def _unique_names(curves: List[CurveSpec]) -> Dict[CurveSpec, str]:
    names: Dict[CurveSpec, str] = {}
    used: Dict[str, int] = {}
    for curve in curves:
        name = curve.name
        if name in used:
            used[name] += 1
            name = f"{name}#{used[name]}"
        else:
            used[name] = 1
        names[curve] = name
    return names


def _names_of(curves, names: Dict[CurveSpec, str]) -> List[str]:
    return [names[curve] for curve in curves]


def dump_document(document: FactorizationDocument) -> Dict[str, Any]:
    """Serialize to a JSON/YAML-ready dict with the core keys first, then extras in their order."""
    lift = document.lift
    groups = [lift.cycles]
    if document.base is not None and document.base.surface == lift.surface:
        groups.append(document.base.cycles)
    if document.witness is not None:
        groups.append([curve for curve, _ in document.witness.rho.twists])
        groups.append(document.witness.curves)
    table = curve_table([document.curves] + groups)
    names = _unique_names(table)

    data: Dict[str, Any] = {
        "schema": SCHEMA,
        "surface": lift.surface.to_dict(),
        "closed": document.closed,
        "boundary_exponents": list(lift.boundary_exponents),
        "curves": [_curve_entry(curve, names) for curve in table],
        "cycles": _names_of(lift.cycles, names),
        "trace": [move.to_dict() for move in lift.trace],
        "base": None,
        "witness": None,
    }
    if document.base is not None:
        base = document.base
        base_names = _names_of(base.cycles, names) if base.surface == lift.surface else base.names
        data["base"] = {
            "surface": base.surface.to_dict(),
            "cycles": base_names,
            "boundary_exponents": list(base.boundary_exponents),
        }
    if document.witness is not None:
        witness = document.witness
        data["witness"] = {
            "rho": [{"curve": names[c], "exponent": k} for c, k in witness.rho.twists],
            "curves": _names_of(witness.curves, names),
            "positions": list(witness.positions),
        }
    for key, value in document.extras.items():
        if key not in data:
            data[key] = value
    return data


# --- reading -----------------------------------------------------------------

def _require(data: Dict[str, Any], key: str, kind) -> Any:
    if key not in data:
        raise SchemaError(f"missing key '{key}'")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"'{key}' must be {getattr(kind, '__name__', kind)}, got {type(value).__name__}")
    return value


class _Resolver:
    def __init__(self, surface: SurfaceKind, evaluator: Evaluator):
        self.surface = surface
        self.evaluator = evaluator
        self.catalog = catalog_for(surface)
        self.table: Dict[str, CurveSpec] = {}
        self.order: List[CurveSpec] = []

    def get(self, name: str) -> CurveSpec:
        if name in self.table:
            return self.table[name]
        try:
            return self.catalog.get(name)
        except CatalogError as e:
            raise SchemaError(str(e)) from None

    def twists(self, items) -> MappingClass:
        try:
            return MappingClass(self.surface, tuple((self.get(item["curve"]), int(item["exponent"])) for item in items))
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"malformed twist list: {e}") from None

    def _standard(self, name: str, entry: Dict[str, Any]) -> CurveSpec:
        """Catalog curve by name, or a named curve given by its π1 word (the lantern curves)."""
        base_name = name.split("#")[0]
        if base_name in self.catalog or base_name in self.table:
            return self.get(base_name)
        word = entry.get("pi1")
        if word is None:
            raise SchemaError(f"curve {name} is neither in the catalog nor given by a π1 word")
        try:
            return standard_curve(self.surface, base_name, parse_word(self.surface.alphabet, word),
                                  separating=entry.get("separating"))
        except MonodromyError as e:
            raise SchemaError(f"curve {name}: {e}") from None

    def add(self, entry: Dict[str, Any]) -> None:
        name = _require(entry, "name", str)
        realization = _require(entry, "realization", dict)
        kind = realization.get("kind")
        if kind == "standard":
            curve = self._standard(name, entry)
        elif kind == "image":
            base = self.get(_require(realization, "base", str))
            phi = self.twists(_require(realization, "phi", list))
            curve = self.evaluator.image(phi, base, name=name)
            if curve.name != name:
                raise SchemaError(f"curve {name} re-derives to the known curve {curve.name}")
        else:
            raise SchemaError(f"curve {name}: unknown realization kind '{kind}'")
        stored = entry.get("h1")
        if stored is not None and list(stored) != list(curve.h1.coords):
            raise SchemaError(f"curve {name}: stored homology {stored} differs from re-derived {list(curve.h1.coords)}")
        word = entry.get("pi1")
        if word is not None and curve.word is not None:
            try:
                same = conj_class(parse_word(self.surface.alphabet, word), True) == curve.pi1_class
            except MonodromyError as e:
                raise SchemaError(f"curve {name}: bad π1 word: {e}") from None
            if not same:
                raise SchemaError(f"curve {name}: stored π1 word is not conjugate to the re-derived one")
        self.table[name] = curve
        self.order.append(curve)


def _check_trace(trace: List[MoveRecord]) -> None:
    for move in trace:
        if move.kind != "substitution" or move.relator is None:
            continue
        expected = sigma_delta_for_label(move.relator)
        if expected != move.sigma_delta:
            raise SchemaError(f"trace records sigma delta {move.sigma_delta} for {move.relator}, expected {expected}")


def load_document(data: Dict[str, Any], evaluator: Optional[Evaluator] = None) -> FactorizationDocument:
    """
    Rebuild a document, re-deriving every image curve.

    Raises:
        SchemaError: wrong schema tag, missing keys, unknown curves or inconsistent data
    """
    if not isinstance(data, dict):
        raise SchemaError("document must be a mapping")
    schema = _require(data, "schema", str)
    if schema != SCHEMA:
        raise SchemaError(f"unsupported schema '{schema}', expected '{SCHEMA}'")
    evaluator = evaluator or Evaluator()
    try:
        surface = SurfaceKind.from_dict(_require(data, "surface", dict))
    except (KeyError, TypeError, ValueError, MonodromyError) as e:
        raise SchemaError(f"bad surface: {e}") from None

    resolver = _Resolver(surface, evaluator)
    for entry in _require(data, "curves", list):
        if not isinstance(entry, dict):
            raise SchemaError("curve entries must be mappings")
        resolver.add(entry)

    try:
        trace = [MoveRecord.from_dict(item) for item in _require(data, "trace", list)]
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"malformed trace record: {e}") from None
    _check_trace(trace)

    cycles = [resolver.get(name) for name in _require(data, "cycles", list)]
    exponents = [int(k) for k in _require(data, "boundary_exponents", list)]
    try:
        lift = Factorization(surface, cycles, exponents, trace)
    except MonodromyError as e:
        raise SchemaError(str(e)) from None

    base = None
    if data.get("base") is not None:
        raw = data["base"]
        try:
            base_surface = SurfaceKind.from_dict(_require(raw, "surface", dict))
        except (KeyError, TypeError, ValueError, MonodromyError) as e:
            raise SchemaError(f"bad base surface: {e}") from None
        if base_surface == surface:
            base_cycles = [resolver.get(name) for name in _require(raw, "cycles", list)]
        else:
            catalog = catalog_for(base_surface)
            try:
                base_cycles = [catalog.get(name) for name in _require(raw, "cycles", list)]
            except CatalogError as e:
                raise SchemaError(str(e)) from None
        try:
            base = Factorization(base_surface, base_cycles, _require(raw, "boundary_exponents", list))
        except MonodromyError as e:
            raise SchemaError(f"bad base: {e}") from None

    witness = None
    if data.get("witness") is not None:
        raw = data["witness"]
        witness = TrivialityWitness(
            rho=resolver.twists(_require(raw, "rho", list)),
            curves=tuple(resolver.get(name) for name in _require(raw, "curves", list)),
            positions=tuple(int(p) for p in raw.get("positions", [])),
        )

    extras = {key: value for key, value in data.items() if key not in CORE_KEYS}
    logger.debug(f"Loaded {len(cycles)} cycles on {surface} with {len(resolver.order)} table curves")
    return FactorizationDocument(
        lift=lift,
        closed=bool(data.get("closed", False)),
        base=base,
        witness=witness,
        curves=resolver.order,
        extras=extras,
    )
