"""
Factorization file parser: reads json or yaml documents into
FactorizationDocuments and renders outputs as json, yaml or text.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml

from errors import SchemaError, UsageError
from mcg import Evaluator

from .document import CORE_KEYS, FactorizationDocument, dump_document, load_document


FORMATS = ("json", "yaml", "text")

# extras the build command writes next to the core keys
KNOWN_EXTRAS = ("construction", "report", "stages", "relators", "intermediates", "certificate", "reduction", "pi1")


class FactorizationParser:
    """
    Parser class for monodromy documents.

    Input format is detected (json first, then yaml). In strict mode
    unknown top-level keys are rejected; otherwise they are kept as
    extras and written back unchanged.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the FactorizationParser.

        Args:
            config: ``output`` section of the configuration
        """
        self.config = config
        self.strict_mode = config.get("strict_mode", False)
        self.supported_formats = config.get("supported_formats", ["json", "yaml"])
        self.indent = config.get("indent", 2)

        self.logger = logging.getLogger(self.__class__.__name__)
        self.logger.debug(f"Initialized FactorizationParser with formats: {self.supported_formats}")

        # Track parsing statistics
        self.parse_count = 0
        self.error_count = 0
        self.format_stats = {fmt: 0 for fmt in self.supported_formats}

    def parse(self, input_data: Union[str, Dict[str, Any]], evaluator: Evaluator = None) -> FactorizationDocument:
        """
        Parse a document from text or an already decoded mapping.

        Args:
            input_data: document text or dict
            evaluator: evaluator image curves are re-derived with

        Returns:
            The loaded document

        Raises:
            SchemaError: undecodable input or a document that fails validation
        """
        self.parse_count += 1
        try:
            data = input_data if isinstance(input_data, dict) else self._decode(input_data)
            self._validate_keys(data)
            return load_document(data, evaluator)
        except SchemaError as e:
            self.error_count += 1
            self.logger.error(f"Parsing failed: {e}")
            raise

    def parse_file(self, path: Union[str, Path], evaluator: Evaluator = None) -> FactorizationDocument:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e}") from None
        return self.parse(text, evaluator)

    def _decode(self, input_str: str) -> Dict[str, Any]:
        input_str = input_str.strip()

        if "json" in self.supported_formats:
            try:
                data = json.loads(input_str)
                self.format_stats["json"] += 1
                return data
            except json.JSONDecodeError:
                pass

        if "yaml" in self.supported_formats:
            try:
                data = yaml.safe_load(input_str)
                if isinstance(data, dict):
                    self.format_stats["yaml"] += 1
                    return data
            except yaml.YAMLError:
                pass

        raise SchemaError(f"input is not a {' or '.join(self.supported_formats)} mapping")

    def _validate_keys(self, data: Any) -> None:
        if not isinstance(data, dict):
            raise SchemaError("document must be a mapping")
        if self.strict_mode:
            unknown = [key for key in data if key not in CORE_KEYS and key not in KNOWN_EXTRAS]
            if unknown:
                raise SchemaError(f"unknown top-level keys: {unknown}")

    # --- writing ---------------------------------------------------------------

    def render(self, data: Any, fmt: str = "json") -> str:
        """
        Render a JSON-ready value.

        Raises:
            UsageError: unsupported format
        """
        if fmt == "json":
            return json.dumps(data, indent=self.indent, ensure_ascii=False) + "\n"
        if fmt == "yaml":
            return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
        if fmt == "text":
            return "\n".join(_text_lines(data, 0)) + "\n"
        raise UsageError(f"unknown output format '{fmt}', expected one of {list(FORMATS)}")

    def render_document(self, document: FactorizationDocument, fmt: str = "json") -> str:
        return self.render(dump_document(document), fmt)

    def write(self, text: str, path: Union[str, Path]) -> None:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        self.logger.info(f"Wrote {target}")

    def get_statistics(self) -> Dict[str, Any]:
        """
        Get parsing statistics.

        Returns:
            Statistics dictionary
        """
        return {
            "total_parsed": self.parse_count,
            "errors": self.error_count,
            "format_breakdown": self.format_stats.copy(),
        }

    def reset_statistics(self) -> None:
        """Reset parsing statistics."""
        self.parse_count = 0
        self.error_count = 0
        self.format_stats = {fmt: 0 for fmt in self.supported_formats}


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return f"{value['num']}/{value['den']}"
    return str(value)


def _text_lines(data: Any, depth: int) -> List[str]:
    pad = "  " * depth
    lines: List[str] = []
    inline = _scalar_list(data)
    if inline is not None:
        return [f"{pad}{inline}"]
    if isinstance(data, dict):
        for key, value in data.items():
            inline = _scalar_list(value)
            if inline is not None:
                lines.append(f"{pad}{key}: {inline}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, depth + 1))
    else:
        for item in data:
            lines.append(f"{pad}-")
            lines.extend(_text_lines(item, depth + 1))
    return lines


def _scalar_list(value: Any):
    """Lists of scalars print on one line; everything else is None."""
    if isinstance(value, dict):
        return _scalar(value) if set(value) == {"num", "den"} else None
    if not isinstance(value, list):
        return _scalar(value)
    if any(isinstance(item, (dict, list)) for item in value):
        return None
    return " ".join(_scalar(item) for item in value) if value else "[]"
