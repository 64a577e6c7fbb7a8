"""
Unit tests for the relator library.
"""

import unittest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from errors import CatalogError, RelatorError
from mcg import Evaluator, Level, MappingClass, Status
from relators import (
    DISJOINT,
    ONCE,
    braid,
    chain,
    derived,
    even_chain,
    mck,
    odd_chain,
    sigma_delta_for_label,
    w_relator,
)
from surface import SurfaceKind, catalog_for


class TestBraidAndChain(unittest.TestCase):
    """Test cases for braid and chain relators."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(3, 1))
        self.evaluator = Evaluator()

    def test_braid_forms_verify_at_l2(self):
        """Test both braid forms on curves with π1 formulas."""
        once = braid(self.catalog.get("a1"), self.catalog.get("b1"), ONCE)
        disjoint = braid(self.catalog.get("a1"), self.catalog.get("a2"), DISJOINT)
        for relator in (once, disjoint):
            verdict = relator.verify(self.evaluator, Level.L2)
            self.assertEqual(verdict.status, Status.VERIFIED)
            self.assertEqual(relator.sigma_delta, 0)

    def test_braid_kind_checked(self):
        """Test that the intersection number must match the braid kind."""
        with self.assertRaises(RelatorError):
            braid(self.catalog.get("a1"), self.catalog.get("a2"), ONCE)
        with self.assertRaises(RelatorError):
            braid(self.catalog.get("a1"), self.catalog.get("b1"), DISJOINT)

    def test_two_chain_verifies_at_l2(self):
        """Test (t_{a1} t_{b1})^6 = t_{c1}."""
        relator = chain([self.catalog.get("A1"), self.catalog.get("A2")], [self.catalog.get("c1")])
        self.assertEqual(len(relator.positive), 12)
        self.assertEqual(relator.verify(self.evaluator, Level.L2).status, Status.VERIFIED)

    def test_odd_chain(self):
        """Test C_3 with boundary pair (a2, a2')."""
        relator = odd_chain(self.catalog, 2)
        self.assertEqual(relator.label, "C_3")
        self.assertEqual(relator.cycle_delta, 10)
        self.assertEqual(relator.sigma_delta, 6)
        self.assertEqual(relator.verify(self.evaluator, Level.L1).status, Status.VERIFIED)
        verdict = relator.verify(self.evaluator, Level.L2)
        self.assertEqual(verdict.status, Status.VERIFIED)
        self.assertEqual(verdict.level, Level.L2)

    def test_four_chain_verifies_at_l2(self):
        """Test C_4 = t_{a3} on the genus-2 one-boundary surface."""
        catalog = catalog_for(SurfaceKind(2, 1))
        relator = even_chain(catalog)
        self.assertEqual(len(relator.positive), 40)
        verdict = relator.verify(self.evaluator, Level.L2)
        self.assertEqual(verdict.status, Status.VERIFIED)
        self.assertEqual(verdict.level, Level.L2)

    def test_braid_through_a_ribbon_curve(self):
        """Test the braid relator of A3 and b1, which needs the ribbon twist of A3."""
        relator = braid(self.catalog.get("A3"), self.catalog.get("b1"), ONCE)
        verdict = relator.verify(self.evaluator, Level.L2)
        self.assertEqual(verdict.status, Status.VERIFIED)
        self.assertEqual(verdict.level, Level.L2)

    def test_even_chain(self):
        """Test C_2g on the one-boundary surface."""
        relator = even_chain(self.catalog)
        self.assertEqual(len(relator.positive), 6 * 14)
        self.assertEqual(relator.negative, (self.catalog.get("a4"),))
        self.assertEqual(relator.verify(self.evaluator, Level.L1).status, Status.VERIFIED)

    def test_even_chain_needs_one_boundary(self):
        """Test that C_2g is refused on the two-boundary surface."""
        with self.assertRaises(CatalogError):
            even_chain(catalog_for(SurfaceKind(3, 2)))

    def test_chain_pattern_checked(self):
        """Test that non-chain curve sequences are rejected."""
        with self.assertRaises(RelatorError):
            chain([self.catalog.get("A1"), self.catalog.get("A3")], [self.catalog.get("c1")])

    def test_inverse(self):
        """Test that inversion swaps the parts and negates the delta."""
        relator = odd_chain(self.catalog, 2)
        inverse = relator.inverse()
        self.assertEqual(inverse.positive, relator.negative)
        self.assertEqual(inverse.negative, relator.positive)
        self.assertEqual(inverse.sigma_delta, -6)
        self.assertEqual(inverse.label, "C_3^-1")
        self.assertEqual(inverse.inverse(), relator)

    def test_wrong_relator_refuted(self):
        """Test that a bogus relation raises RelatorError."""
        relator = derived([self.catalog.get("a1")], [self.catalog.get("b1")], "bogus")
        with self.assertRaises(RelatorError):
            relator.verify(self.evaluator, Level.L1)


class TestWRelators(unittest.TestCase):
    """Test cases for the W relators and their capped-off form."""

    def setUp(self):
        """Set up test fixtures."""
        self.evaluator = Evaluator()

    def test_w_relators_verify_at_l1(self):
        """Test W_{1,h} and W_{2,h} for every h ≤ g ≤ 4."""
        for g in range(2, 5):
            catalog = catalog_for(SurfaceKind(g, 2))
            for h in range(1, g + 1):
                for s in (1, 2):
                    relator = w_relator(catalog, s, h)
                    with self.subTest(g=g, h=h, s=s):
                        self.assertEqual(relator.verify(self.evaluator, Level.L1).status, Status.VERIFIED)

    def test_w2g_up_to_genus_six(self):
        """Test the full W_{2,g} for g = 2, ..., 6."""
        for g in range(2, 7):
            relator = w_relator(catalog_for(SurfaceKind(g, 2)), 2, g)
            with self.subTest(g=g):
                self.assertEqual(relator.verify(self.evaluator, Level.L1).status, Status.VERIFIED)
                self.assertEqual(relator.label, f"W_2,{g}")

    def test_w_relator_ranges(self):
        """Test the index checks."""
        catalog = catalog_for(SurfaceKind(3, 2))
        with self.assertRaises(RelatorError):
            w_relator(catalog, 3, 2)
        with self.assertRaises(RelatorError):
            w_relator(catalog, 1, 4)
        with self.assertRaises(CatalogError):
            w_relator(catalog_for(SurfaceKind(3, 1)), 1, 2)

    def test_mck_is_positive(self):
        """Test that the capped W_{2,g} is a positive relator of the closed surface."""
        relator = mck(2)
        self.assertTrue(relator.is_positive)
        self.assertTrue(relator.surface.is_closed)
        self.assertEqual(relator.verify(self.evaluator, Level.L1).status, Status.VERIFIED)
        product = MappingClass.positive(relator.surface, relator.positive)
        self.assertEqual(len(product), len(relator.positive))


class TestSignatureDeltas(unittest.TestCase):
    """Test cases for signature bookkeeping by label."""

    def test_known_labels(self):
        """Test deltas re-derived from relator labels."""
        self.assertEqual(sigma_delta_for_label("B"), 0)
        self.assertEqual(sigma_delta_for_label("L"), 1)
        self.assertEqual(sigma_delta_for_label("L^-1"), -1)
        self.assertEqual(sigma_delta_for_label("C_5"), 16)
        self.assertEqual(sigma_delta_for_label("C_5^-1"), -16)

    def test_unknown_labels(self):
        """Test that relators without bookkeeping give None."""
        self.assertIsNone(sigma_delta_for_label("C_6"))
        self.assertIsNone(sigma_delta_for_label("W_2,3"))
        self.assertIsNone(sigma_delta_for_label("MCK_2"))


if __name__ == '__main__':
    unittest.main()
