"""End-to-end checks of the g2harm command line: exit codes and JSON shape."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = None


def run(*args):
    proc = subprocess.run([EXE, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args)
    return code, json.loads(out), err


class Verify(unittest.TestCase):
    def test_default_passes(self):
        code, doc, _ = run_json("verify")
        self.assertEqual(code, 0)
        self.assertTrue(doc["pass"])
        self.assertEqual(doc["failures"], [])
        self.assertGreater(len(doc["checks"]), 40)
        for check in doc["checks"]:
            self.assertTrue(check["pass"], check["name"])

    def test_impossible_tolerance_fails(self):
        code, doc, _ = run_json("verify", "--tol", "1e-20")
        self.assertEqual(code, 1)
        self.assertFalse(doc["pass"])

    def test_single_sample(self):
        code, doc, _ = run_json("verify", "--samples", "1", "--seed", "9")
        self.assertEqual(code, 0)
        self.assertEqual(doc["config"]["samples"], 1)

    def test_bad_flags(self):
        self.assertEqual(run("verify", "--samples", "0")[0], 2)
        self.assertEqual(run("verify", "--tol", "-1")[0], 2)
        self.assertEqual(run("verify", "--samples", "many")[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            code, out, _ = run("verify", "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path) as fh:
                self.assertTrue(json.load(fh)["pass"])

    def test_deterministic(self):
        first = run("verify", "--seed", "42")[1]
        second = run("verify", "--seed", "42")[1]
        self.assertEqual(first, second)
        self.assertNotEqual(first, run("verify", "--seed", "43")[1])


class Basis(unittest.TestCase):
    def test_basis(self):
        code, doc, _ = run_json("basis")
        self.assertEqual(code, 0)
        mats = doc["basis"]
        self.assertEqual(len(mats), 14)
        for m in mats:
            self.assertEqual(len(m), 7)
            for row in m:
                self.assertEqual(len(row), 7)
        self.assertAlmostEqual(doc["lambda"], -2.0, delta=1e-10)
        self.assertLessEqual(doc["gram_residual"], 1e-10)

    def test_seventeen_digits(self):
        _, out, _ = run("basis")
        self.assertIn("0.57735026918962573", out)


class Eigenfamily(unittest.TestCase):
    def test_canonical(self):
        code, doc, _ = run_json("eigenfamily", "--vector", "1,i,0,0,0,0,0")
        self.assertEqual(code, 0)
        self.assertTrue(doc["report"]["pass"])
        self.assertAlmostEqual(doc["report"]["lambda"], -2.0, delta=1e-10)
        self.assertAlmostEqual(doc["report"]["mu"], -1.0 / 3.0, delta=1e-15)

    def test_non_isotropic(self):
        code, doc, _ = run_json("eigenfamily", "-p", "1,0,0,0,0,0,0")
        self.assertEqual(code, 2)
        self.assertIn("error", doc)

    def test_wrong_arity(self):
        code, doc, _ = run_json("eigenfamily", "-p", "1,i,0")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["position"], 5)


class Morphism(unittest.TestCase):
    def test_linear(self):
        code, doc, _ = run_json("morphism", "-P", "z1", "-Q", "z2")
        self.assertEqual(code, 0)
        self.assertTrue(doc["report"]["pass"])
        self.assertGreaterEqual(doc["report"]["admitted_samples"], 90)

    def test_quadratic(self):
        code, doc, _ = run_json("morphism", "-P", "z1^2+z2*z3", "-Q", "z4^2", "--samples", "150")
        self.assertEqual(code, 0)
        self.assertLessEqual(doc["report"]["max_abs_error"], 1e-7)

    def test_inhomogeneous(self):
        code, doc, _ = run_json("morphism", "-P", "z1", "-Q", "z1+z2^2")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["code"], "inhomogeneous")

    def test_dependent(self):
        code, doc, _ = run_json("morphism", "-P", "2*z1", "-Q", "z1")
        self.assertEqual(code, 2)
        self.assertEqual(doc["error"]["code"], "linearly_dependent")

    def test_parse_error(self):
        code, doc, _ = run_json("morphism", "-P", "z1 +* z2", "-Q", "z3")
        self.assertEqual(code, 2)

    def test_vanishing_denominator(self):
        squares = "+".join(f"z{k}^2" for k in range(1, 8))
        code, doc, _ = run_json("morphism", "-P", "z1*z2", "-Q", squares)
        self.assertEqual(code, 3)
        self.assertEqual(doc["report"]["verdict"], "inconclusive")

    def test_missing_denominator(self):
        self.assertEqual(run("morphism", "-P", "z1")[0], 2)


if __name__ == "__main__":
    EXE = sys.argv.pop(1)
    unittest.main()
