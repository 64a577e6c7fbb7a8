"""
Monodromy: positive Dehn twist factorizations and the Lefschetz fibrations they describe.
"""

__version__ = "1.0.0"
