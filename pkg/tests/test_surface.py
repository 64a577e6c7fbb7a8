"""
Unit tests for surfaces, homology and the curve catalog.
"""

import unittest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from errors import CatalogError
from surface import HomologyClass, SurfaceKind, catalog_for, homology_of, intersection, project_to_closed


class TestSurfaceKind(unittest.TestCase):
    """Test cases for SurfaceKind."""

    def test_alphabet_and_rank(self):
        """Test generator labels with and without the second boundary."""
        self.assertEqual(SurfaceKind(2, 1).alphabet.names, ("a1", "b1", "a2", "b2"))
        self.assertEqual(SurfaceKind(2, 2).alphabet.names, ("a1", "b1", "a2", "b2", "d2"))
        self.assertEqual(SurfaceKind(2, 2).rank, 5)
        self.assertEqual(SurfaceKind(3, 0).rank, 6)

    def test_invalid_surfaces(self):
        """Test range checks on genus and boundary count."""
        with self.assertRaises(CatalogError):
            SurfaceKind(0, 1)
        with self.assertRaises(CatalogError):
            SurfaceKind(2, 3)

    def test_dict_round_trip(self):
        """Test to_dict and from_dict."""
        surface = SurfaceKind(4, 2)
        self.assertEqual(SurfaceKind.from_dict(surface.to_dict()), surface)
        self.assertTrue(surface.closed().is_closed)


class TestHomology(unittest.TestCase):
    """Test cases for homology classes and the intersection form."""

    def setUp(self):
        """Set up test fixtures."""
        self.surface = SurfaceKind(3, 1)
        self.catalog = catalog_for(self.surface)

    def test_standard_pairing(self):
        """Test ⟨a_i, b_i⟩ = 1 and disjoint pairs."""
        a1, b1, a2 = (self.catalog.get(name).h1 for name in ("a1", "b1", "a2"))
        self.assertEqual(intersection(a1, b1), 1)
        self.assertEqual(intersection(b1, a1), -1)
        self.assertEqual(intersection(a1, a2), 0)

    def test_chain_curves_meet_once(self):
        """Test that consecutive chain curves pair to ±1 and others to 0."""
        chain = [self.catalog.get(f"A{i}").h1 for i in range(1, 7)]
        for i in range(6):
            for j in range(i + 1, 6):
                expected = 1 if j == i + 1 else 0
                self.assertEqual(abs(intersection(chain[i], chain[j])), expected)

    def test_homology_of_word(self):
        """Test abelianization of A_3 = a1 a2⁻¹."""
        word = self.catalog.get("A3").word
        self.assertEqual(homology_of(self.surface, word).coords, (1, 0, -1, 0, 0, 0))

    def test_up_to_sign(self):
        """Test sign normalization."""
        x = HomologyClass(self.surface, (0, -1, 2, 0, 0, 0))
        self.assertEqual(x.up_to_sign(), (0, 1, -2, 0, 0, 0))
        self.assertEqual((-x).up_to_sign(), x.up_to_sign())


class TestCatalog(unittest.TestCase):
    """Test cases for the named curve catalog."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(3, 2))

    def test_separating_curves(self):
        """Test that c_j is null-homologous with genus split j."""
        for j in range(1, 4):
            curve = self.catalog.get(f"c{j}")
            self.assertTrue(curve.is_separating)
            self.assertEqual(curve.separating, j)

    def test_primed_curves_are_homologous(self):
        """Test that a'_k and a_k have the same class."""
        for k in range(2, 4):
            self.assertEqual(self.catalog.get(f"a{k}'").h1, self.catalog.get(f"a{k}").h1)

    def test_boundary_curves(self):
        """Test that both boundary curves carry the d2 class."""
        a4 = self.catalog.get("a4")
        a4_prime = self.catalog.get("a4'")
        self.assertEqual(a4.h1.coords[-1], 1)
        self.assertEqual(a4_prime.h1, a4.h1)

    def test_b_curves_present(self):
        """Test that every B-curve family is in the catalog."""
        for h in range(1, 4):
            for suffix in ["01", "02"] + [str(i) for i in range(1, h + 1)]:
                self.assertIn(f"B{h}_{suffix}", self.catalog)

    def test_unknown_curve(self):
        """Test that unknown names raise CatalogError."""
        with self.assertRaises(CatalogError):
            self.catalog.get("z9")

    def test_catalog_is_shared(self):
        """Test that catalog_for returns one catalog per surface."""
        self.assertIs(catalog_for(SurfaceKind(3, 2)), self.catalog)

    def test_project_to_closed(self):
        """Test that standard curves project by name."""
        closed = catalog_for(SurfaceKind(3, 0))
        projected = project_to_closed(self.catalog.get("b2"), closed)
        self.assertIs(projected, closed.get("b2"))
        self.assertEqual(len(projected.h1.coords), 6)

    def test_to_dict(self):
        """Test the catalog dump."""
        data = self.catalog.to_dict()
        self.assertEqual(data["surface"], {"genus": 3, "boundary": 2})
        names = [entry["name"] for entry in data["curves"]]
        self.assertIn("A6", names)
        self.assertIn("a4'", names)


if __name__ == '__main__':
    unittest.main()
