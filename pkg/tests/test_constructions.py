"""
Unit tests for the chain rewrite and the two fibration families.
"""

import unittest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from constructions import (
    ConstructionController,
    TrivialityWitness,
    auxiliary_lantern,
    certificate_basis,
    chain_rewrite_plan,
    check_witness,
    find_witness,
    lantern_candidates,
    lemma41,
    phi_twists,
    psi_catalog,
    rewritten_chain,
    select_e2,
)
from errors import PipelineError, UsageError
from factorization import MoveEngine
from fpgroups import AbelianInvariants, abelianization, homology_presentation, quotient_certificate
from mcg import Evaluator, Level, Status
from surface import SurfaceKind, catalog_for
from words import conj_class


ENGINE = {"default_level": "L1", "lift_level": "L1"}


class TestChainRewrite(unittest.TestCase):
    """Test cases for the chain rewrite lemma."""

    def setUp(self):
        """Set up test fixtures."""
        self.engine = MoveEngine(Evaluator(), ENGINE)

    def test_plan_needs_two_curves(self):
        """Test that a one-curve chain has no rewrite."""
        with self.assertRaises(PipelineError):
            chain_rewrite_plan(1)

    def test_plan_offset(self):
        """Test that offsets shift every position."""
        plain = chain_rewrite_plan(4)
        shifted = chain_rewrite_plan(4, 10)
        self.assertEqual([(kind, p + 10) for kind, p in plain], shifted)

    def test_genus_two(self):
        """Test the rewrite of C_4 into C'_4."""
        catalog = catalog_for(SurfaceKind(2, 1))
        rewritten = lemma41(self.engine, catalog)
        self.assertEqual(list(rewritten.cycles), rewritten_chain(catalog))
        self.assertEqual(len(rewritten), 40)
        self.assertEqual(rewritten.sigma_delta_total, 0)
        self.assertEqual(self.engine.check_lift(rewritten).status, Status.VERIFIED)

    def test_genus_three(self):
        """Test the rewrite of C_6 into C'_6."""
        catalog = catalog_for(SurfaceKind(3, 1))
        rewritten = lemma41(self.engine, catalog)
        self.assertEqual(len(rewritten), 84)
        self.assertEqual(rewritten.names[:5], ["A1", "A2", "A3", "A4", "A5"])

    def test_genus_one_rejected(self):
        """Test the genus check."""
        with self.assertRaises(PipelineError):
            lemma41(self.engine, catalog_for(SurfaceKind(1, 1)))


class TestAuxiliaryMaps(unittest.TestCase):
    """Test cases for the ψ maps and φ_n."""

    def test_psi_gates_pass(self):
        """Test that e1 and e2 get their homology classes."""
        catalog = catalog_for(SurfaceKind(3, 1))
        psi = psi_catalog(Evaluator(), catalog)
        self.assertEqual(psi.e1.name, "e1")
        self.assertEqual(psi.e1.h1.up_to_sign(), (1, 0, 0, 0, -1, 0))
        self.assertEqual(psi.e2.h1.up_to_sign(), (1, 0, -1, 0, 1, 0))
        self.assertEqual(sorted(psi.by_label()), ["psi1", "psi2", "psi3"])

    def test_lantern_closes_at_l2(self):
        """Test that exactly one candidate e2 makes the lantern the identity on π1."""
        catalog = catalog_for(SurfaceKind(3, 1))
        evaluator = Evaluator()
        e1, candidates = lantern_candidates(catalog)
        self.assertEqual(len(candidates), 2)
        verified = []
        for candidate in candidates:
            verdict = evaluator.is_identity(auxiliary_lantern(catalog, e1, candidate).word, Level.L2)
            if verdict.verified and verdict.level == Level.L2:
                verified.append(candidate)
        self.assertEqual(len(verified), 1)
        chosen = select_e2(evaluator, catalog, e1, candidates)
        self.assertIs(chosen, verified[0])

    def test_psi_images_at_l2(self):
        """Test ψ_1(A_1) = a_2, ψ_2(A_1) = e_1, ψ_3(A_1) = e_2 as π1 classes."""
        catalog = catalog_for(SurfaceKind(3, 1))
        evaluator = Evaluator()
        psi = psi_catalog(evaluator, catalog)
        a1 = catalog.get("A1")
        targets = {"psi1": catalog.get("a2"), "psi2": psi.e1, "psi3": psi.e2}
        for label, phi in psi.by_label().items():
            with self.subTest(psi=label):
                word = evaluator.image_word(phi, a1)
                self.assertIsNotNone(word)
                self.assertEqual(conj_class(word, True), targets[label].pi1_class)
                a3 = catalog.get("a3")
                self.assertEqual(conj_class(evaluator.image_word(phi, a3), True), a3.pi1_class)

    def test_lantern_needs_a_bordered_surface(self):
        """Test that the lantern curves are refused on a closed surface."""
        with self.assertRaises(PipelineError):
            lantern_candidates(catalog_for(SurfaceKind(3, 0)))

    def test_psi_needs_genus_three(self):
        """Test that ψ needs three handles."""
        with self.assertRaises(PipelineError):
            psi_catalog(Evaluator(), catalog_for(SurfaceKind(2, 1)))

    def test_phi_twists_by_parity(self):
        """Test the twist word of φ_n for both parities of ⌊g/2⌋."""
        self.assertEqual(phi_twists(4, 3), [("a1", 3)])
        self.assertEqual(phi_twists(5, 2), [("a1", 2)])
        self.assertEqual(phi_twists(8, 2), [("a1", 1), ("a2", 2), ("b4", 1)])
        self.assertEqual(phi_twists(10, 1), [("a1", 1), ("a2", 1), ("b5", 1)])

    def test_phi_ranges(self):
        """Test the range checks of φ_n."""
        with self.assertRaises(UsageError):
            phi_twists(3, 1)
        with self.assertRaises(UsageError):
            phi_twists(4, 0)


class TestSimplyConnectedFamily(unittest.TestCase):
    """Test cases for the genus-3 simply connected family."""

    @classmethod
    def setUpClass(cls):
        """Build once; the pipeline is the expensive part."""
        cls.controller = ConstructionController(ENGINE)
        cls.report = cls.controller.execute({"theorem": "thm1", "genus": 3})

    def test_cycle_count(self):
        """Test 2g(4g+2)+1 singular fibers."""
        self.assertEqual(len(self.report.final), 85)
        self.assertEqual(len(self.report.lift), 85)
        self.assertTrue(self.report.final.surface.is_closed)

    def test_stages(self):
        """Test that every stage was gated."""
        names = [stage.name for stage in self.report.stages]
        self.assertEqual(names, ["C2g", "C2g_prime", "H", "H_psi1", "H_prime", "H_double_prime", "I", "I_hat"])
        self.assertFalse(self.report.inconclusive)

    def test_signature_ledger(self):
        """Test the net signature change of -1."""
        self.assertEqual(self.report.final.sigma_delta_total, -1)
        labels = [move.relator for move in self.report.lift.trace if move.kind == "substitution"]
        self.assertEqual(labels, ["C_5^-1", "C_5^-1", "C_5", "C_5", "L^-1"])

    def test_lift_keeps_the_boundary_twist(self):
        """Test the bordered lift against t_δ."""
        self.assertEqual(self.report.lift.boundary_exponents, (1,))
        self.assertEqual(self.report.base.surface, self.report.final.surface)

    def test_witness(self):
        """Test that ρ(A_1), …, ρ(A_6) all occur as cycles."""
        witness = self.report.witness
        self.assertEqual(len(witness.curves), 6)
        self.assertTrue(check_witness(Evaluator(), self.report.lift, witness))

    def test_witness_positions_are_checked(self):
        """Test that the witness cycles are distinct and that shuffled positions fail."""
        witness = self.report.witness
        self.assertEqual(len(set(witness.positions)), len(witness.positions))
        shuffled = TrivialityWitness(witness.rho, witness.curves, witness.positions[1:] + witness.positions[:1])
        self.assertFalse(check_witness(Evaluator(), self.report.lift, shuffled))

    def test_homology_is_trivial(self):
        """Test that H1 of the total space vanishes."""
        self.assertTrue(abelianization(homology_presentation(self.report.final)).is_trivial)


class TestSimplyConnectedLiftAtL2(unittest.TestCase):
    """Test case for the genus-3 family with every bordered stage checked on π1."""

    @classmethod
    def setUpClass(cls):
        """Build once with L2 relator and lift checks."""
        engine = {"default_level": "L2", "lift_level": "L2", "word_budget": 20_000_000}
        cls.report = ConstructionController(engine).execute({"theorem": "thm1", "genus": 3})

    def test_bordered_stages_verified_on_pi1(self):
        """Test that C_6 through Î are Verified at L2 on the bordered surface."""
        bordered = [stage for stage in self.report.stages if stage.name != "I_hat"]
        self.assertEqual(len(bordered), 7)
        for stage in bordered:
            with self.subTest(stage=stage.name):
                self.assertEqual(stage.verdict.status, Status.VERIFIED)
                self.assertEqual(stage.verdict.level, Level.L2)

    def test_witness_found_by_pi1_class(self):
        """Test that the L2 build finds the same witness curves."""
        self.assertTrue(check_witness(Evaluator(), self.report.lift, self.report.witness))


class TestTorsionFamily(unittest.TestCase):
    """Test cases for the family Û_n."""

    def setUp(self):
        """Set up test fixtures."""
        self.controller = ConstructionController(ENGINE)

    def test_genus_four(self):
        """Test 26 cycles and H1 = Z ⊕ Z_n."""
        for n in (1, 2, 3):
            report = self.controller.execute({"theorem": "thm2", "genus": 4, "n": n})
            with self.subTest(n=n):
                self.assertEqual(len(report.final), 26)
                self.assertEqual(report.final.boundary_exponents, (1, 1))
                h1 = abelianization(homology_presentation(report.final))
                self.assertEqual(h1.free_rank, 1)
                self.assertEqual(h1.torsion, () if n == 1 else (n,))

    def test_genus_five(self):
        """Test the odd-genus layout with its a_{r+1} tail."""
        report = self.controller.execute({"theorem": "thm2", "genus": 5, "n": 2})
        self.assertEqual(len(report.final), 32)
        self.assertEqual(report.lift.names[6:8], ["B2_02", "B2_1"])

    def test_staged_reduction(self):
        """Test G1, G2, G3 for g = 4 and 5 with n = 2."""
        expected = {4: [AbelianInvariants(4), AbelianInvariants(2), AbelianInvariants(1, (2,))],
                    5: [AbelianInvariants(4), AbelianInvariants(2), AbelianInvariants(1, (2,))]}
        for g, invariants in expected.items():
            report = self.controller.execute({"theorem": "thm2", "genus": g, "n": 2})
            with self.subTest(g=g):
                self.assertEqual([stage.name for stage in report.reduction], ["G1", "G2", "G3"])
                self.assertTrue(all(stage.matches for stage in report.reduction))
                self.assertEqual([stage.invariants for stage in report.reduction], invariants)
                self.assertEqual(report.reduction[-1].presentation.rank, 2 * g)

    def test_certificate_basis(self):
        """Test a_1 ↦ (0, 1) and b_1 ↦ (1, 0) onto Z ⊕ Z_3 for g = 4."""
        report = self.controller.execute({"theorem": "thm2", "genus": 4, "n": 3})
        self.assertEqual(certificate_basis(4), ("a1", "b1"))
        certificate = quotient_certificate(report.final, certificate_basis(4))
        self.assertEqual(certificate["describe"], "Z + Z_3")
        self.assertEqual(certificate["images"]["a1"], [0, 1])
        self.assertEqual(certificate["images"]["b1"], [1, 0])
        self.assertTrue(certificate["relators_vanish"])
        self.assertTrue(certificate["surjective"])


class TestConstructionController(unittest.TestCase):
    """Test cases for ConstructionController."""

    def setUp(self):
        """Set up test fixtures."""
        self.controller = ConstructionController({"name": "TestController", **ENGINE})

    def test_initialization(self):
        """Test controller initialization."""
        self.assertEqual(self.controller.name, "TestController")
        self.assertEqual(self.controller.current_status, "idle")
        self.assertEqual(self.controller.get_status()["execution_count"], 0)

    def test_unknown_theorem(self):
        """Test that unknown constructions are a usage error."""
        with self.assertRaises(UsageError):
            self.controller.execute({"theorem": "thm3", "genus": 3})

    def test_missing_parameters(self):
        """Test that thm2 needs n."""
        with self.assertRaises(UsageError):
            self.controller.execute({"theorem": "thm2", "genus": 4})

    def test_genus_too_small_is_recorded(self):
        """Test that failed builds land in the history."""
        with self.assertRaises(UsageError):
            self.controller.execute({"theorem": "thm1", "genus": 2})
        with self.assertRaises(UsageError):
            self.controller.execute({"theorem": "thm2", "genus": 3, "n": 1})
        history = self.controller.get_execution_history()
        self.assertEqual(len(history), 2)
        self.assertEqual(history[0]["status"], "error")
        self.assertEqual(self.controller.current_status, "error")

    def test_reset(self):
        """Test controller reset."""
        with self.assertRaises(UsageError):
            self.controller.execute({"theorem": "thm1", "genus": 2})
        self.controller.reset()
        self.assertEqual(len(self.controller.get_execution_history()), 0)
        self.assertEqual(self.controller.current_status, "idle")


if __name__ == '__main__':
    unittest.main()
