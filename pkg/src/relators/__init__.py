"""
Relators of the mapping class group with signature bookkeeping.
"""

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
from .library import (
    DISJOINT,
    ONCE,
    braid,
    chain,
    chain_curves,
    derived,
    even_chain,
    lantern,
    mck,
    odd_chain,
    sigma_delta,
    sigma_delta_for_label,
    w_block,
    w_relator,
)

__all__ = [
    "BRAID",
    "CHAIN_EVEN",
    "CHAIN_ODD",
    "DERIVED",
    "LANTERN",
    "MCK",
    "W_RELATOR",
    "Relator",
    "DISJOINT",
    "ONCE",
    "braid",
    "chain",
    "chain_curves",
    "derived",
    "even_chain",
    "lantern",
    "mck",
    "odd_chain",
    "sigma_delta",
    "sigma_delta_for_label",
    "w_block",
    "w_relator",
]
