"""
Free group words: reduction, products, conjugacy classes and text form.
"""

from .free_group import (
    Alphabet,
    Word,
    ConjClass,
    free_reduce,
    reduce,
    multiply,
    invert,
    conjugate,
    conj_class,
    parse_word,
)

__all__ = [
    "Alphabet",
    "Word",
    "ConjClass",
    "free_reduce",
    "reduce",
    "multiply",
    "invert",
    "conjugate",
    "conj_class",
    "parse_word",
]
