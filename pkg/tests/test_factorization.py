"""
Unit tests for factorizations and the move engine.
"""

import random
import unittest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from errors import MoveError
from factorization import LEFT, RIGHT, Factorization, MoveEngine, MoveRecord, h1_multiset, sections
from mcg import Evaluator, Level, MappingClass, Status
from mcg.homology import matrices_equal
from relators import DISJOINT, ONCE, braid, chain, odd_chain
from surface import SurfaceKind, catalog_for


def torus_chain(catalog):
    """(t_{a1} t_{b1})^6 = t_δ on the one-holed torus."""
    a1, b1 = catalog.get("a1"), catalog.get("b1")
    return Factorization(catalog.surface, (a1, b1) * 6, (1,))


class TestFactorizationModel(unittest.TestCase):
    """Test cases for Factorization and MoveRecord."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(1, 1))
        self.f = torus_chain(self.catalog)

    def test_basic_properties(self):
        """Test length, names and description."""
        self.assertEqual(len(self.f), 12)
        self.assertEqual(self.f.names[:2], ["a1", "b1"])
        self.assertTrue(self.f.describe().startswith("t_a1 t_b1"))
        self.assertEqual(self.f.sigma_delta_total, 0)

    def test_boundary_exponent_count_checked(self):
        """Test that exponents must match the boundary components."""
        with self.assertRaises(MoveError):
            Factorization(self.catalog.surface, self.f.cycles, (1, 1))

    def test_cycles_must_share_the_surface(self):
        """Test that foreign cycles are rejected."""
        other = catalog_for(SurfaceKind(2, 1)).get("a1")
        with self.assertRaises(MoveError):
            Factorization(self.catalog.surface, (other,), (1,))

    def test_unknown_sigma_delta(self):
        """Test that one unknown delta makes the total unknown."""
        record = MoveRecord("substitution", 0, relator="W_2,2", sigma_delta=None)
        f = self.f.with_cycles(self.f.cycles, record)
        self.assertIsNone(f.sigma_delta_total)

    def test_move_record_round_trip(self):
        """Test MoveRecord to_dict and from_dict."""
        record = MoveRecord("substitution", 3, relator="L^-1", sigma_delta=-1, cycle_delta=-1, detail="x")
        self.assertEqual(MoveRecord.from_dict(record.to_dict()), record)
        unknown = MoveRecord("substitution", 0, relator="W_1,2", sigma_delta=None)
        self.assertEqual(MoveRecord.from_dict(unknown.to_dict()), unknown)

    def test_sections(self):
        """Test that exponent-1 components give (-1)-sections."""
        self.assertEqual(sections(self.f), [-1])
        surface = SurfaceKind(2, 2)
        f = Factorization(surface, (), (1, 0))
        self.assertEqual(sections(f), [-1])


class TestMoveEngine(unittest.TestCase):
    """Test cases for the MoveEngine."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(1, 1))
        self.evaluator = Evaluator()
        self.engine = MoveEngine(self.evaluator, {"default_level": "L2"})
        self.f = torus_chain(self.catalog)

    def test_lift_verified_at_l2(self):
        """Test that the torus chain lifts to the boundary twist."""
        verdict = self.engine.check_lift(self.f, Level.L2)
        self.assertEqual(verdict.status, Status.VERIFIED)

    def test_elementary_transformation_right(self):
        """Test (t_v, t_w) → (t_{t_v(w)}, t_v)."""
        g = self.engine.elementary_transformation(self.f, 0, RIGHT)
        self.assertEqual(g.cycles[1], self.catalog.get("a1"))
        self.assertEqual(g.cycles[0].h1.coords, (1, 1))
        self.assertTrue(self.engine.same_product(self.f, g))
        self.assertEqual(g.trace[-1].kind, "elementary")

    def test_elementary_transformation_left(self):
        """Test (t_v, t_w) → (t_w, t_{t_w⁻¹(v)})."""
        g = self.engine.elementary_transformation(self.f, 0, LEFT)
        self.assertEqual(g.cycles[0], self.catalog.get("b1"))
        self.assertTrue(self.engine.same_product(self.f, g))

    def test_elementary_out_of_range(self):
        """Test index and direction checks."""
        with self.assertRaises(MoveError):
            self.engine.elementary_transformation(self.f, 11, RIGHT)
        with self.assertRaises(MoveError):
            self.engine.elementary_transformation(self.f, 0, "up")

    def test_wrong_identification_rejected(self):
        """Test that identify checks homology."""
        with self.assertRaises(MoveError):
            self.engine.elementary_transformation(self.f, 0, RIGHT, identify=self.catalog.get("b1"))

    def test_braid_shuffle(self):
        """Test (a, b, a) → (b, a, b)."""
        g = self.engine.braid_shuffle(self.f, 0)
        self.assertEqual(g.names[:3], ["b1", "a1", "b1"])
        self.assertTrue(self.engine.same_product(self.f, g))
        with self.assertRaises(MoveError):
            self.engine.braid_shuffle(g, 1)

    def test_commute_disjoint(self):
        """Test swapping disjoint curves."""
        catalog = catalog_for(SurfaceKind(2, 1))
        f = Factorization(catalog.surface, (catalog.get("a1"), catalog.get("a2")), (0,))
        g = self.engine.commute(f, 0)
        self.assertEqual(g.names, ["a2", "a1"])
        self.assertEqual(g.trace[-1].detail, "commute")
        self.assertTrue(self.engine.same_product(f, g))

    def test_commute_refuses_intersecting_curves(self):
        """Test that a1 and b1 do not commute."""
        with self.assertRaises(MoveError):
            self.engine.commute(self.f, 0)

    def test_commute_refuses_without_l2(self):
        """Test that disjointness cannot be confirmed on a closed surface."""
        closed = catalog_for(SurfaceKind(2, 0))
        f = Factorization(closed.surface, (closed.get("a1"), closed.get("a2")), (1,))
        with self.assertRaisesRegex(MoveError, "L2 unavailable"):
            self.engine.commute(f, 0)

    def test_commute_same_curve(self):
        """Test that equal neighbours are left alone."""
        a1 = self.catalog.get("a1")
        f = Factorization(self.catalog.surface, (a1, a1), (0,))
        self.assertIs(self.engine.commute(f, 0), f)

    def test_push_twist(self):
        """Test pushing the first cycle to the end and back."""
        g = self.engine.push_twist(self.f, 0)
        self.assertEqual(g.cycles[-1], self.catalog.get("a1"))
        self.assertTrue(self.engine.same_product(self.f, g))
        back = self.engine.push_twist(g, 11, 0)
        self.assertEqual(back.cycles[0], self.catalog.get("a1"))
        self.assertEqual(h1_multiset(back), h1_multiset(self.f))

    def test_simultaneous_conjugation(self):
        """Test that conjugation keeps the lift."""
        phi = MappingClass.from_names(self.catalog, ["a1", ("b1", -1)])
        g = self.engine.simultaneous_conjugation(self.f, phi, "phi")
        self.assertEqual(len(g), 12)
        self.assertEqual(self.engine.check_lift(g, Level.L1).status, Status.VERIFIED)
        self.assertEqual(g.trace[-1].phi, "phi")

    def test_partial_conjugation_needs_fixed_complement(self):
        """Test that φ must fix the cycles outside the segments."""
        phi = MappingClass.from_names(self.catalog, ["a1"])
        with self.assertRaises(MoveError):
            self.engine.partial_conjugation(self.f, [(0, 2)], phi)
        whole = self.engine.partial_conjugation(self.f, [(0, 12)], phi, "t")
        self.assertTrue(self.engine.same_product(self.f, whole))

    def test_partial_conjugation_needs_l2(self):
        """Test that a complement fixed only in H1 is refused."""
        closed = catalog_for(SurfaceKind(2, 0))
        f = Factorization(closed.surface, (closed.get("a1"), closed.get("a2"), closed.get("b1")), (1,))
        phi = MappingClass.from_names(closed, ["a1"])
        with self.assertRaisesRegex(MoveError, "L2 unavailable"):
            self.engine.partial_conjugation(f, [(2, 3)], phi)

    def test_partial_conjugation_fixed_at_l2(self):
        """Test conjugating the chain for t_c1 by t_a1 next to the disjoint a2."""
        catalog = catalog_for(SurfaceKind(2, 1))
        chain2 = (catalog.get("A1"), catalog.get("A2")) * 6
        f = Factorization(catalog.surface, chain2 + (catalog.get("a2"),), (0,))
        phi = MappingClass.from_names(catalog, ["a1"])
        g = self.engine.partial_conjugation(f, [(0, 12)], phi, "t")
        self.assertIs(g.cycles[0], catalog.get("A1"))
        self.assertEqual(g.cycles[1].name, "t(A2)")
        self.assertEqual(g.cycles[1].h1.coords, (1, 1, 0, 0))
        self.assertEqual(g.cycles[12], catalog.get("a2"))
        self.assertTrue(self.engine.same_product(f, g))

    def test_substitution_needs_l2(self):
        """Test that the twisting map must be checked on π1 words."""
        closed = catalog_for(SurfaceKind(2, 0))
        relator = braid(closed.get("a1"), closed.get("a2"), DISJOINT)
        f = Factorization(closed.surface, relator.negative, (1,))
        engine = MoveEngine(self.evaluator, {"default_level": "L1"})
        phi = MappingClass.from_names(closed, ["a1"])
        with self.assertRaisesRegex(MoveError, "L2 unavailable"):
            engine.substitute(f, 0, relator, phi, "t")
        plain = engine.substitute(f, 0, relator)
        self.assertEqual(plain.names, ["a1", "a2"])

    def test_braid_substitution(self):
        """Test a B-substitution keeps length and records a zero delta."""
        relator = braid(self.catalog.get("a1"), self.catalog.get("b1"), ONCE)
        at = self.engine.find_window(self.f, relator.negative)
        self.assertEqual(at, 1)
        g = self.engine.substitute(self.f, at, relator)
        self.assertEqual(g.names[1:4], ["a1", "b1", "a1"])
        self.assertEqual(g.trace[-1].sigma_delta, 0)
        self.assertEqual(g.trace[-1].relator, "B")
        self.assertTrue(self.engine.same_product(self.f, g))

    def test_substitution_mismatch(self):
        """Test that the window must match the negative part."""
        relator = braid(self.catalog.get("a1"), self.catalog.get("b1"), ONCE)
        with self.assertRaises(MoveError):
            self.engine.substitute(self.f, 0, relator)
        with self.assertRaises(MoveError):
            self.engine.substitute(self.f, 11, relator)

    def test_odd_chain_substitution_bookkeeping(self):
        """Test that C_3^{-1} shortens by 10 cycles with delta -6."""
        catalog = catalog_for(SurfaceKind(2, 1))
        relator = odd_chain(catalog, 2)
        f = Factorization(catalog.surface, relator.positive, (0,))
        g = self.engine.substitute(f, 0, relator.inverse())
        self.assertEqual(g.names, ["a2", "a2'"])
        self.assertEqual(g.sigma_delta_total, -6)
        self.assertEqual(g.cycle_delta_total, -10)
        self.assertTrue(self.engine.same_product(f, g))

    def test_close_up(self):
        """Test closing the boundary keeps exponents and records the sections."""
        closed = self.engine.close_up(self.f)
        self.assertTrue(closed.surface.is_closed)
        self.assertEqual(closed.boundary_exponents, (1,))
        self.assertEqual(sections(closed), [-1])
        self.assertEqual(closed.trace[-1].kind, "close_up")
        self.assertEqual(self.engine.check_lift(closed).status, Status.VERIFIED)
        self.assertIs(self.engine.close_up(closed), closed)


class TestMoveProperties(unittest.TestCase):
    """Seeded randomized checks that moves preserve the product."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(1, 1))
        self.evaluator = Evaluator()
        self.engine = MoveEngine(self.evaluator, {"default_level": "L1"})
        self.rng = random.Random(20240613)
        self.start = torus_chain(self.catalog)
        self.braid = braid(self.catalog.get("a1"), self.catalog.get("b1"), ONCE)
        self.twists = [MappingClass.from_names(self.catalog, [(name, k)]) for name in ("a1", "b1") for k in (1, -1)]

    def random_move(self, f):
        choice = self.rng.randrange(3)
        if choice == 0:
            return self.engine.elementary_transformation(f, self.rng.randrange(len(f) - 1),
                                                         self.rng.choice([LEFT, RIGHT]))
        if choice == 1:
            return self.engine.simultaneous_conjugation(f, self.rng.choice(self.twists))
        try:
            at = self.engine.find_window(f, self.braid.negative)
        except MoveError:
            return f
        return self.engine.substitute(f, at, self.braid)

    def test_random_moves_preserve_product(self):
        """Test 1000 random moves keep the H1 product, length and signature ledger."""
        target = self.evaluator.homology_matrix(self.start.product())
        moves = 0
        while moves < 1000:
            f = self.start
            for _ in range(4):
                f = self.random_move(f)
                moves += 1
            self.assertTrue(matrices_equal(self.evaluator.homology_matrix(f.product()), target))
            self.assertEqual(len(f), 12)
            self.assertEqual(f.sigma_delta_total, 0)
            self.assertEqual(self.engine.check_lift(f, Level.L1).status, Status.VERIFIED)

    def test_chain_substitution_round_trip(self):
        """Test that a chain substitution and its inverse restore the cycle count."""
        chain2 = chain([self.catalog.get("a1"), self.catalog.get("b1")], [self.catalog.get("a2")])
        f = Factorization(self.catalog.surface, (self.catalog.get("a2"),), (1,))
        g = self.engine.substitute(f, 0, chain2)
        self.assertEqual(len(g), 12)
        self.assertEqual(g.cycle_delta_total, 11)
        self.assertIsNone(g.sigma_delta_total)
        back = self.engine.substitute(g, 0, chain2.inverse())
        self.assertEqual(back.names, ["a2"])
        self.assertEqual(back.cycle_delta_total, 0)
        self.assertEqual(back.trace[-1].relator, "C_2^-1")


class TestCommuteProperties(unittest.TestCase):
    """Seeded randomized Hurwitz moves and commutations on the genus-2 chain."""

    def setUp(self):
        """Set up test fixtures."""
        self.catalog = catalog_for(SurfaceKind(2, 1))
        self.evaluator = Evaluator()
        self.engine = MoveEngine(self.evaluator, {"default_level": "L2"})
        self.rng = random.Random(1729)
        chain4 = tuple(self.catalog.get(f"A{i}") for i in range(1, 5))
        self.start = Factorization(self.catalog.surface, chain4 * 10, (1,))

    def position(self, curve):
        return int(curve.name[1:])

    def test_random_commutes_and_round_trips(self):
        """Test 1000 moves: commutations of disjoint chain curves, right-left round trips otherwise."""
        target = self.evaluator.homology_matrix(self.start.product())
        expected = h1_multiset(self.start)
        f = self.start
        moves = 0
        while moves < 1000:
            i = self.rng.randrange(len(f) - 1)
            v, w = f.cycles[i], f.cycles[i + 1]
            if abs(self.position(v) - self.position(w)) == 1:
                there = self.engine.elementary_transformation(f, i, RIGHT)
                back = self.engine.elementary_transformation(there, i, LEFT)
                self.assertEqual(back.cycles, f.cycles)
                f = back
                moves += 2
            else:
                f = self.engine.commute(f, i)
                self.assertEqual((f.cycles[i], f.cycles[i + 1]), (w, v))
                moves += 1
            self.assertTrue(matrices_equal(self.evaluator.homology_matrix(f.product()), target))
        self.assertEqual(h1_multiset(f), expected)
        self.assertEqual(len(f), 40)
        self.assertEqual(sorted(f.names), sorted(self.start.names))

    def test_neighbours_refused(self):
        """Test that consecutive chain curves never commute."""
        for i in range(3):
            with self.subTest(i=i):
                with self.assertRaises(MoveError):
                    self.engine.commute(self.start, i)


if __name__ == '__main__':
    unittest.main()
