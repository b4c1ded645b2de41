#!/usr/bin/env python3
"""End-to-end checks for the pgsynth command line tool.

Usage: cli_test.py <path-to-pgsynth-binary>
"""
import os
import subprocess
import sys
import tempfile
import unittest

BIN = None

ARBITER = "G !(g1 & g2) & G(r1 -> F g1) & G(r2 -> F g2)"


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, input=stdin,
                          timeout=120)


def parse_aag_header(text):
    first = text.splitlines()[0].split()
    assert first[0] == "aag", first
    return [int(x) for x in first[1:6]]  # M I L O A


class Verdicts(unittest.TestCase):
    def test_realizable_exit_code(self):
        r = run("--ins", "r1,r2", "--outs", "g1,g2", "--formula", ARBITER,
                "--mode", "realizability")
        self.assertEqual(r.returncode, 10)
        self.assertEqual(r.stdout.strip(), "REALIZABLE")

    def test_unrealizable_exit_code(self):
        r = run("--ins", "r", "--outs", "g", "--formula", "G(g <-> X r)")
        self.assertEqual(r.returncode, 20)
        self.assertEqual(r.stdout.strip(), "UNREALIZABLE")

    def test_verdict_stable_across_exploration(self):
        for strat in ("bfs", "bfs+", "pq", "pq+"):
            r = run("--ins", "r", "--outs", "g", "--formula", "G(r -> F g)",
                    "--mode", "realizability", "--exploration", strat)
            self.assertEqual(r.returncode, 10, strat)

    def test_stats_line(self):
        r = run("--outs", "g", "--formula", "G F g", "--mode", "realizability",
                "--stats")
        self.assertEqual(r.returncode, 10)
        self.assertIn("env_nodes=", r.stdout)


class Artifacts(unittest.TestCase):
    def test_aag_output(self):
        r = run("--ins", "r1,r2", "--outs", "g1,g2", "--formula", ARBITER)
        self.assertEqual(r.returncode, 10)
        body = r.stdout.split("\n", 1)[1]
        m, i, l, o, a = parse_aag_header(body)
        self.assertEqual(i, 2)
        self.assertEqual(o, 2)

    def test_encodings_and_reduce(self):
        for enc in ("unstructured", "structured", "portfolio"):
            for extra in ([], ["--reduce"]):
                r = run("--ins", "r1,r2", "--outs", "g1,g2", "--formula",
                        ARBITER, "--encoding", enc, "--verify", *extra)
                self.assertEqual(r.returncode, 10, (enc, extra))
                parse_aag_header(r.stdout.split("\n", 1)[1])

    def test_mealy_output(self):
        r = run("--ins", "r", "--outs", "g", "--formula", "G(r <-> X g)",
                "--output", "mealy")
        self.assertEqual(r.returncode, 10)
        self.assertIn("mealy states", r.stdout)
        self.assertIn("->", r.stdout)

    def test_output_none(self):
        r = run("--ins", "r", "--outs", "g", "--formula", "G(r -> F g)",
                "--output", "none")
        self.assertEqual(r.returncode, 10)
        self.assertEqual(r.stdout.strip(), "REALIZABLE")

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "ctrl.aag")
            r = run("--outs", "g", "--formula", "G g", "-o", path)
            self.assertEqual(r.returncode, 10)
            with open(path) as f:
                parse_aag_header(f.read())

    def test_realizability_mode_prints_no_artifact(self):
        r = run("--outs", "g", "--formula", "G g", "--mode", "realizability")
        self.assertEqual(r.stdout.strip(), "REALIZABLE")


class SpecFiles(unittest.TestCase):
    def write(self, text):
        f = tempfile.NamedTemporaryFile("w", suffix=".pgspec", delete=False)
        f.write(text)
        f.close()
        self.addCleanup(os.unlink, f.name)
        return f.name

    def test_sections_comments_continuations(self):
        path = self.write(
            "# two-client arbiter\n"
            "INPUTS: r1, r2\n"
            "OUTPUTS: g1,\n"
            "  g2   # second grant\n"
            "LTL:\n"
            "  G !(g1 & g2)\n"
            "  & G(r1 -> F g1)\n"
            "  & G(r2 -> F g2)\n")
        r = run("-f", path, "--mode", "realizability")
        self.assertEqual(r.returncode, 10, r.stderr)

    def test_cli_overrides_spec_file(self):
        path = self.write("INPUTS: r\nOUTPUTS: g\nLTL: G(g <-> X r)\n")
        r = run("-f", path, "--formula", "G(r <-> X g)", "--mode", "realizability")
        self.assertEqual(r.returncode, 10)

    def test_text_before_section_is_an_error(self):
        path = self.write("G g\nLTL: G g\n")
        r = run("-f", path)
        self.assertEqual(r.returncode, 1)
        self.assertIn("before any section", r.stderr)

    def test_missing_ltl_section(self):
        path = self.write("INPUTS: r\nOUTPUTS: g\n")
        r = run("-f", path)
        self.assertEqual(r.returncode, 1)
        self.assertIn("LTL", r.stderr)


class Errors(unittest.TestCase):
    def test_no_formula(self):
        r = run("--outs", "g")
        self.assertEqual(r.returncode, 1)
        self.assertIn("no formula", r.stderr)

    def test_parse_error(self):
        r = run("--outs", "g", "--formula", "G (g &")
        self.assertEqual(r.returncode, 1)
        self.assertIn("parse error", r.stderr)

    def test_unknown_proposition(self):
        r = run("--outs", "g", "--formula", "G q")
        self.assertEqual(r.returncode, 1)

    def test_bad_flag_value(self):
        r = run("--outs", "g", "--formula", "G g", "--mode", "quickly")
        self.assertNotIn(r.returncode, (0, 10, 20))

    def test_missing_spec_file(self):
        r = run("-f", "/nonexistent/x.pgspec")
        self.assertEqual(r.returncode, 1)
        self.assertIn("cannot open", r.stderr)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit("usage: cli_test.py <pgsynth-binary>")
    BIN = sys.argv[1]
    unittest.main(argv=sys.argv[:1], verbosity=2)
