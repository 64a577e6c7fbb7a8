#!/usr/bin/env python3
"""
Command-line entry point: build the two fibration families, verify and
analyze factorization documents.

Exit codes: 0 success, 1 refuted or internal error, 2 inconclusive,
64 usage error, 65 schema error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from constructions import THEOREM1, THEOREM2, ConstructionController, certificate_basis, check_witness, psi_catalog
from errors import MonodromyError, PresentationError, SchemaError, UsageError
from factorization import MoveEngine, sections
from fpgroups import (
    abelianization,
    homology_presentation,
    pi1_total_space,
    quotient_certificate,
    tietze_simplify,
    todd_coxeter,
)
from invariants import full_report, invariant_report
from mcg import Evaluator, Level, Status, Verdict
from parser import FORMATS, FactorizationParser, pipeline_document
from surface import SurfaceKind, catalog_for


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_SCHEMA = 65

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "config" / "monodromy_config.json"


def setup_logging(config: dict) -> None:
    """Setup logging configuration."""
    log_config = config.get("logging", {})
    level = getattr(logging, log_config.get("level", "WARNING"))
    format_str = log_config.get("format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # stdout carries the documents, so log records go to stderr
    log_file = log_config.get("file")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logging.basicConfig(
            level=level,
            format=format_str,
            handlers=[
                logging.FileHandler(log_file),
                logging.StreamHandler(sys.stderr)
            ]
        )
    else:
        logging.basicConfig(level=level, format=format_str, stream=sys.stderr)


def load_config(config_path: Optional[str] = None) -> dict:
    """Load configuration from JSON file."""
    path = config_path or DEFAULT_CONFIG
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except FileNotFoundError:
        logging.error(f"Configuration file not found: {path}")
        return {}
    except json.JSONDecodeError as e:
        logging.error(f"Invalid JSON in configuration file: {e}")
        return {}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad arguments, which is the inconclusive code here."""

    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> List[int]:
    """``3``, ``3..5`` or ``3,5,7`` as a list of integers."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"cannot read '{text}' as an integer or range") from None
    if not values:
        raise UsageError(f"empty range '{text}'")
    return values


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="monodromy", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--config", help="configuration file (JSON)")
    parser.add_argument("--log-level", help="override the configured log level")
    commands = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    commands.required = True

    def output_flags(sub):
        sub.add_argument("--format", choices=FORMATS, help="output format")
        sub.add_argument("--out", help="output file (a directory for grid builds)")

    build = commands.add_parser("build", help="build a fibration family member")
    build.add_argument("theorem", choices=[THEOREM1, THEOREM2])
    build.add_argument("--genus", required=True, help="genus, or a range such as 3..5")
    build.add_argument("--n", default="1", help="thm2 parameter, or a range")
    build.add_argument("--level", choices=[level.value for level in Level], help="level of the lift gates")
    build.add_argument("--word-budget", type=int, help="letter budget for π1 words")
    build.add_argument("--keep-intermediates", action="store_true", help="write every gated stage")
    output_flags(build)

    verify = commands.add_parser("verify", help="re-derive and verify a factorization document")
    verify.add_argument("path")
    verify.add_argument("--level", choices=[level.value for level in Level], help="verification level cap")
    verify.add_argument("--word-budget", type=int, help="letter budget for π1 words")
    output_flags(verify)

    report = commands.add_parser("report", help="invariants of a factorization document")
    report.add_argument("path")
    output_flags(report)

    catalog = commands.add_parser("catalog", help="dump the named curves of a surface")
    catalog.add_argument("--genus", type=int, required=True)
    catalog.add_argument("--boundary", type=int, default=1, choices=[0, 1, 2])
    output_flags(catalog)

    pi1 = commands.add_parser("pi1", help="fundamental group of the total space")
    pi1.add_argument("path")
    pi1.add_argument("--max-cosets", type=int, help="coset table limit")
    output_flags(pi1)
    return parser


def _engine_config(config: dict, args: argparse.Namespace) -> Dict[str, Any]:
    """The ``engine`` section with command-line overrides."""
    engine = dict(config.get("engine", {}))
    if getattr(args, "word_budget", None) is not None:
        engine["word_budget"] = args.word_budget
    if getattr(args, "level", None) is not None:
        engine["lift_level"] = args.level
        engine["default_level"] = args.level
    if getattr(args, "keep_intermediates", False):
        engine["keep_intermediates"] = True
    return engine


def _emit(parser: FactorizationParser, text: str, target: Optional[str]) -> None:
    if target:
        parser.write(text, target)
    else:
        sys.stdout.write(text)


def _worst(verdicts) -> Verdict:
    order = {Status.VERIFIED: 0, Status.INCONCLUSIVE: 1, Status.REFUTED: 2}
    return max(verdicts, key=lambda verdict: order[verdict.status])


def _exit_code(verdict: Verdict) -> int:
    if verdict.refuted:
        return EXIT_FAILURE
    return EXIT_INCONCLUSIVE if not verdict.verified else EXIT_OK


def build_extras(pipeline, keep_intermediates: bool) -> Dict[str, Any]:
    """Construction metadata, invariant report, stage log and (thm2) the quotient certificate."""
    h1 = abelianization(homology_presentation(pipeline.final))
    extras: Dict[str, Any] = {
        "construction": {"theorem": pipeline.theorem, "genus": pipeline.genus, "n": pipeline.n},
        "report": full_report(pipeline, h1).to_dict(),
        "stages": [stage.to_dict() for stage in pipeline.stages],
        "relators": {label: relator.to_dict() for label, relator in pipeline.relators.items()},
    }
    if pipeline.theorem == THEOREM2:
        certificate = quotient_certificate(pipeline.final, certificate_basis(pipeline.genus))
        if not (certificate["relators_vanish"] and certificate["surjective"]):
            raise PresentationError(f"quotient map onto {certificate['describe']} failed its check")
        extras["certificate"] = certificate
        extras["reduction"] = [stage.to_dict() for stage in pipeline.reduction]
    if keep_intermediates:
        extras["intermediates"] = {name: f.names for name, f in pipeline.intermediates.items()}
    return extras


def cmd_build(args: argparse.Namespace, config: dict, parser: FactorizationParser) -> int:
    engine = _engine_config(config, args)
    controller = ConstructionController(engine)
    genera = parse_range(args.genus)
    ns = parse_range(args.n) if args.theorem == THEOREM2 else [None]
    fmt = args.format or config.get("output", {}).get("format", "json")
    keep = engine.get("keep_intermediates", False)
    grid = len(genera) * len(ns) > 1

    status = EXIT_OK
    for g in genera:
        for n in ns:
            request = {"theorem": args.theorem, "genus": g}
            if n is not None:
                request["n"] = n
            pipeline = controller.execute(request)
            document = pipeline_document(pipeline, build_extras(pipeline, keep))
            text = parser.render_document(document, fmt)
            target = args.out
            if grid and args.out:
                suffix = f"_n{n}" if n is not None else ""
                extension = "txt" if fmt == "text" else fmt
                target = str(Path(args.out) / f"{args.theorem}_g{g}{suffix}.{extension}")
            _emit(parser, text, target)
            if pipeline.inconclusive:
                logging.getLogger(__name__).warning(f"{args.theorem} g={g}: {pipeline.verdict.reason}")
                status = EXIT_INCONCLUSIVE
    return status


def cmd_verify(args: argparse.Namespace, config: dict, parser: FactorizationParser) -> int:
    engine_config = _engine_config(config, args)
    evaluator = Evaluator(engine_config)
    engine = MoveEngine(evaluator, engine_config)
    level = Level(args.level or engine_config.get("default_level", "L1"))
    document = parser.parse_file(args.path, evaluator)

    checks: Dict[str, Verdict] = {"lift": engine.check_lift(document.lift, level)}
    if document.closed and not document.lift.surface.is_closed:
        checks["closed"] = engine.check_lift(document.factorization, Level.L1)
    if document.base is not None:
        checks["base"] = engine.check_lift(document.base, Level.L1)
    if document.witness is not None:
        found = check_witness(evaluator, document.lift, document.witness)
        checks["witness"] = Verdict(Status.VERIFIED if found else Status.REFUTED, Level.L1,
                                    "" if found else "witness cycles not found")
    verdict = _worst(checks.values())
    result = {
        "path": args.path,
        "cycles": len(document.lift),
        "verdict": verdict.to_dict(),
        "checks": {name: check.to_dict() for name, check in checks.items()},
    }
    _emit(parser, parser.render(result, args.format or "json"), args.out)
    return _exit_code(verdict)


def cmd_report(args: argparse.Namespace, config: dict, parser: FactorizationParser) -> int:
    document = parser.parse_file(args.path, Evaluator(config.get("engine", {})))
    f = document.factorization
    h1 = abelianization(homology_presentation(f)) if sections(f) else None
    report = invariant_report(f, document.base, h1)
    _emit(parser, parser.render(report.to_dict(), args.format or "json"), args.out)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, config: dict, parser: FactorizationParser) -> int:
    if args.genus < 1:
        raise UsageError(f"genus must be at least 1, got {args.genus}")
    catalog = catalog_for(SurfaceKind(args.genus, args.boundary))
    data = catalog.to_dict()
    if args.genus >= 3 and args.boundary >= 1:
        psi = psi_catalog(Evaluator(config.get("engine", {})), catalog)
        for curve, phi in ((psi.e1, psi.psi2), (psi.e2, psi.psi3)):
            data["curves"].append({
                "name": curve.name,
                "pi1": curve.word.to_text(),
                "h1": list(curve.h1.coords),
                "separating": curve.separating,
                "hyperelliptic": sorted(curve.involutions),
                "realization": "standard",
                "psi": phi.to_list(),
                "pi1_formula": True,
            })
    _emit(parser, parser.render(data, args.format or "json"), args.out)
    return EXIT_OK


def cmd_pi1(args: argparse.Namespace, config: dict, parser: FactorizationParser) -> int:
    engine = config.get("engine", {})
    max_cosets = args.max_cosets or engine.get("max_cosets", 100_000)
    document = parser.parse_file(args.path, Evaluator(engine))
    f = document.factorization
    witness = document.witness.curves if document.witness is not None else None

    result: Dict[str, Any] = {"path": args.path}
    try:
        presentation = pi1_total_space(f, witness)
    except PresentationError as e:
        if not sections(f):
            raise
        # no π1 words: only the abelian data is available
        presentation = None
        result["pi1"] = {"status": "Unavailable", "reason": str(e)}
    if presentation is not None:
        simplified = tietze_simplify(presentation)
        result["presentation"] = {
            "note": presentation.note,
            "generators": len(presentation.generators),
            "relators": len(presentation.relators),
        }
        result["simplified"] = {
            "generators": list(simplified.generators),
            "relators": [word.to_text() for word in simplified.relators],
        }
        result["enumeration"] = todd_coxeter(simplified, max_cosets).to_dict()
    result["abelianization"] = abelianization(homology_presentation(f)).to_dict()
    _emit(parser, parser.render(result, args.format or "json"), args.out)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "report": cmd_report,
    "catalog": cmd_catalog,
    "pi1": cmd_pi1,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point."""
    try:
        args = build_arg_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE

    config = load_config(args.config)
    if args.log_level:
        config.setdefault("logging", {})["level"] = args.log_level.upper()
    setup_logging(config)
    logger = logging.getLogger(__name__)
    parser = FactorizationParser(config.get("output", {}))

    try:
        return COMMANDS[args.command](args, config, parser)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except SchemaError as e:
        logger.error(f"Schema error: {e}")
        sys.stderr.write(f"schema error: {e}\n")
        return EXIT_SCHEMA
    except MonodromyError as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
