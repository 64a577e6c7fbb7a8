"""
Parser module for reading and writing monodromy documents.
"""

from .document import (
    SCHEMA,
    FactorizationDocument,
    closed_factorization,
    curve_table,
    dump_document,
    load_document,
    pipeline_document,
)
from .factorization_parser import FORMATS, FactorizationParser

__all__ = [
    "SCHEMA",
    "FactorizationDocument",
    "closed_factorization",
    "curve_table",
    "dump_document",
    "load_document",
    "pipeline_document",
    "FORMATS",
    "FactorizationParser",
]
