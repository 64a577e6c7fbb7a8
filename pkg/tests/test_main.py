"""
Unit tests for the command-line interface.
"""

import json
import shutil
import tempfile
import unittest
import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from errors import UsageError
from main import EXIT_OK, EXIT_SCHEMA, EXIT_USAGE, load_config, main, parse_range


class TestHelpers(unittest.TestCase):
    """Test cases for argument helpers and configuration."""

    def test_parse_range(self):
        """Test single values, ranges and lists."""
        self.assertEqual(parse_range("3"), [3])
        self.assertEqual(parse_range("3..5"), [3, 4, 5])
        self.assertEqual(parse_range("4,6"), [4, 6])

    def test_parse_range_errors(self):
        """Test malformed ranges."""
        with self.assertRaises(UsageError):
            parse_range("three")
        with self.assertRaises(UsageError):
            parse_range("5..3")

    def test_default_config(self):
        """Test that the shipped configuration loads."""
        config = load_config()
        self.assertEqual(config["engine"]["default_level"], "L1")
        self.assertIn("json", config["output"]["supported_formats"])

    def test_missing_config(self):
        """Test that a missing file gives an empty configuration."""
        self.assertEqual(load_config("/nonexistent/config.json"), {})


class TestCommands(unittest.TestCase):
    """Test cases for the subcommands."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.tmp)

    def path(self, name):
        return os.path.join(self.tmp, name)

    def read_json(self, name):
        with open(self.path(name), encoding="utf-8") as f:
            return json.load(f)

    def test_usage_errors(self):
        """Test bad arguments and out-of-range genus."""
        self.assertEqual(main(["build"]), EXIT_USAGE)
        self.assertEqual(main(["build", "thm1", "--genus", "2", "--out", self.path("x.json")]), EXIT_USAGE)
        self.assertEqual(main(["catalog", "--genus", "0"]), EXIT_USAGE)
        self.assertFalse(os.path.exists(self.path("x.json")))

    def test_catalog(self):
        """Test the curve catalog dump."""
        self.assertEqual(main(["catalog", "--genus", "2", "--boundary", "2", "--out", self.path("c.json")]), EXIT_OK)
        data = self.read_json("c.json")
        self.assertEqual(data["surface"], {"genus": 2, "boundary": 2})

    def test_catalog_with_lantern_curves(self):
        """Test that genus-3 catalogs list e1 and e2."""
        self.assertEqual(main(["catalog", "--genus", "3", "--out", self.path("c.json")]), EXIT_OK)
        names = [entry["name"] for entry in self.read_json("c.json")["curves"]]
        self.assertIn("e1", names)
        self.assertIn("e2", names)
        e1 = next(entry for entry in self.read_json("c.json")["curves"] if entry["name"] == "e1")
        self.assertEqual(e1["realization"], "standard")
        self.assertEqual(e1["pi1"], "a1 a3^-1")
        self.assertTrue(e1["pi1_formula"])

    def test_build_verify_report_pi1(self):
        """Test the full cycle on a genus-4 Û_2 document."""
        doc = self.path("u2.json")
        self.assertEqual(main(["build", "thm2", "--genus", "4", "--n", "2", "--out", doc]), EXIT_OK)
        data = self.read_json("u2.json")
        self.assertEqual(len(data["cycles"]), 26)
        self.assertEqual(data["report"]["e"], 14)
        self.assertTrue(data["certificate"]["relators_vanish"])
        self.assertEqual(data["certificate"]["images"]["a1"], [0, 1])
        self.assertEqual(data["certificate"]["images"]["b1"], [1, 0])
        self.assertEqual([stage["name"] for stage in data["reduction"]], ["G1", "G2", "G3"])
        self.assertEqual(data["reduction"][-1]["h1"], "Z + Z_2")

        self.assertEqual(main(["verify", doc, "--out", self.path("v.json")]), EXIT_OK)
        verdict = self.read_json("v.json")
        self.assertEqual(verdict["verdict"]["status"], "Verified")
        self.assertIn("closed", verdict["checks"])

        self.assertEqual(main(["report", doc, "--out", self.path("r.json")]), EXIT_OK)
        report = self.read_json("r.json")
        self.assertEqual(report["h1"], {"free_rank": 1, "torsion": [2]})
        self.assertTrue(report["nonholomorphic_flags"]["pi1_obstruction"])
        self.assertEqual(report["sections"], 2)

        self.assertEqual(main(["pi1", doc, "--max-cosets", "20", "--out", self.path("p.json")]), EXIT_OK)
        pi1 = self.read_json("p.json")
        self.assertEqual(pi1["abelianization"], {"free_rank": 1, "torsion": [2]})
        self.assertEqual(pi1["enumeration"]["status"], "Inconclusive")

    def test_grid_build(self):
        """Test that grid builds write one file per parameter."""
        self.assertEqual(main(["build", "thm2", "--genus", "4", "--n", "1..2", "--format", "yaml",
                               "--out", self.tmp]), EXIT_OK)
        self.assertTrue(os.path.exists(self.path("thm2_g4_n1.yaml")))
        self.assertTrue(os.path.exists(self.path("thm2_g4_n2.yaml")))

    def test_schema_error(self):
        """Test that undecodable documents exit with the schema code."""
        with open(self.path("bad.json"), "w", encoding="utf-8") as f:
            f.write("just words\n")
        self.assertEqual(main(["verify", self.path("bad.json")]), EXIT_SCHEMA)

    def test_missing_document(self):
        """Test that a missing document is a usage error."""
        self.assertEqual(main(["report", self.path("none.json")]), EXIT_USAGE)


if __name__ == '__main__':
    unittest.main()
