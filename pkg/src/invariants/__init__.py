"""
Euler characteristic, signature, Chern numbers and slope of total spaces.
"""

from .report import (
    BOTH,
    HYPERELLIPTIC,
    INDECOMPOSABLE_NOTE,
    LEDGER,
    UNAVAILABLE,
    InvariantReport,
    chern_numbers,
    euler,
    full_report,
    invariant_report,
    rational,
    signature_hyperelliptic,
    signature_ledger,
    slope,
    split_counts,
)

__all__ = [
    "BOTH",
    "HYPERELLIPTIC",
    "INDECOMPOSABLE_NOTE",
    "LEDGER",
    "UNAVAILABLE",
    "InvariantReport",
    "chern_numbers",
    "euler",
    "full_report",
    "invariant_report",
    "rational",
    "signature_hyperelliptic",
    "signature_ledger",
    "slope",
    "split_counts",
]
