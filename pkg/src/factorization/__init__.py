"""
Positive factorizations and the moves that rewrite them.
"""

from .model import Factorization, MoveRecord
from .moves import LEFT, RIGHT, MoveEngine, conjugated_multiset, h1_multiset, sections

__all__ = [
    "Factorization",
    "MoveRecord",
    "LEFT",
    "RIGHT",
    "MoveEngine",
    "conjugated_multiset",
    "h1_multiset",
    "sections",
]
