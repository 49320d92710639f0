"""
Integration tests for the vacuous reduct command line.

These tests run main.py in a subprocess and check stdout and exit codes.
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

# Add parent directory to path
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '../..'))
sys.path.insert(0, ROOT)

from formats.apx import parse_apx_corpus  # noqa: E402

F1_APX = "arg(a).\narg(b).\narg(c).\narg(d).\natt(a,b).\natt(b,c).\natt(c,a).\natt(c,d).\n"
F6_APX = "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n"


class IntegrationTest(unittest.TestCase):
    """End-to-end runs of every subcommand."""

    @classmethod
    def setUpClass(cls):
        """Set up input files in a temporary directory."""
        cls.temp_dir = tempfile.TemporaryDirectory()
        cls.f1 = cls._write("f1.apx", F1_APX)
        cls.corpus = cls._write("two.apx", F1_APX + "%---\n" + F6_APX)
        cls.tgf = cls._write("f6.tgf", "a\nb\n#\na b\nb a\n")
        cls.broken = cls._write("broken.apx", "arg(a).\natt(a,b).\n")

    @classmethod
    def tearDownClass(cls):
        """Clean up test environment."""
        cls.temp_dir.cleanup()

    @classmethod
    def _write(cls, name, text):
        path = os.path.join(cls.temp_dir.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def _run(self, *args, stdin=None):
        return subprocess.run(
            [sys.executable, os.path.join(ROOT, "main.py"), *args],
            input=stdin,
            capture_output=True,
            text=True,
            cwd=self.temp_dir.name,
            timeout=300,
        )

    def test_solve_undisputed(self):
        """The undisputed extensions of F1 are the empty set and {d}."""
        result = self._run("solve", "--semantics", "ud", self.f1)
        self.assertEqual(result.returncode, 0, result.stderr)
        self.assertEqual(result.stdout, "[[],[d]]\n")

    def test_solve_named_and_generic_tokens_agree(self):
        named = self._run("solve", "--semantics", "ud", self.f1)
        generic = self._run("solve", "--semantics", "vac:cf:adm", self.f1)
        self.assertEqual(named.stdout, generic.stdout)

    def test_solve_block_file_as_json(self):
        """One JSON line per framework in a block file."""
        result = self._run("solve", "--semantics", "stb", "--output", "json", self.corpus)
        self.assertEqual(result.returncode, 0, result.stderr)
        lines = result.stdout.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertEqual(json.loads(lines[0])["extensions"], [])
        self.assertEqual(json.loads(lines[1])["extensions"], [["a"], ["b"]])

    def test_solve_stdin_and_tgf(self):
        from_stdin = self._run("solve", "--semantics", "ud", "-", stdin=F6_APX)
        self.assertEqual(from_stdin.stdout, "[[a],[b]]\n")
        from_tgf = self._run("solve", "--semantics", "ud", self.tgf)
        self.assertEqual(from_tgf.stdout, "[[a],[b]]\n")

    def test_solve_no_extensions(self):
        result = self._run("solve", "--semantics", "stb", self.f1)
        self.assertEqual(result.stdout, "NO\n")

    def test_explain(self):
        accepted = self._run("explain", "--semantics", "ud", "--set", "d", self.f1)
        self.assertEqual(accepted.returncode, 0, accepted.stderr)
        self.assertIn("reduct F^E = <{a,b,c}, {(a,b),(b,c),(c,a)}>", accepted.stdout)
        self.assertIn("level 0: ud\n", accepted.stdout)
        self.assertIn("adm vacuity holds", accepted.stdout)
        self.assertIn("verdict: E is a ud extension", accepted.stdout)

        rejected = self._run("explain", "--semantics", "ud", "--set", "a", self.f1)
        self.assertIn("adm vacuity fails: nonempty extension {c}", rejected.stdout)
        self.assertIn("verdict: E is not a ud extension", rejected.stdout)

        nested = self._run("explain", "--semantics", "vac:ud:stb", "--set", "d", self.f1)
        self.assertIn("level 0: vac:ud:stb\n", nested.stdout)
        self.assertIn("level 1: ud\n", nested.stdout)
        self.assertIn("stb vacuity holds", nested.stdout)

    def test_verify_confirmed(self):
        result = self._run("verify", "--claim", "T1:adm:adm", "--corpus", "exhaustive:3")
        self.assertEqual(result.returncode, 0, result.stderr)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["confirmed"], 1)
        self.assertEqual(payload["reports"][0]["afs_checked"], 512)
        self.assertNotIn("wall_time", payload["reports"][0])

    def test_verify_refuted_exits_nonzero(self):
        result = self._run("verify", "--claim", "ID-STB-IFF", "--corpus", "exhaustive:3:iso")
        self.assertEqual(result.returncode, 1)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["reports"][0]["refutation"]["direction"], "backward")

    def test_serial_and_parallel_agree(self):
        """One worker and eight workers over 32 chunks print the same reports."""
        small_chunks = self._write("chunks.ini", "[runtime]\nchunk_size = 16\n")
        verify = ("--config", small_chunks, "verify", "--claim", "T1:cf:", "--claim", "ID-STB-IFF",
                  "--corpus", "exhaustive:3")
        serial = self._run("--workers", "1", *verify)
        parallel = self._run("--workers", "8", *verify)
        self.assertEqual(serial.returncode, 1, serial.stderr)
        self.assertEqual(parallel.returncode, 1, parallel.stderr)
        self.assertEqual(serial.stdout, parallel.stdout)

        principles = ("--config", small_chunks, "principles", "--semantics", "ud", "--all",
                      "--corpus", "exhaustive:3")
        self.assertEqual(self._run("--workers", "1", *principles).stdout,
                         self._run("--workers", "8", *principles).stdout)

    def test_principles(self):
        args = ["principles", "--semantics", "ud", "--principle", "admissibility", "--corpus", "exhaustive:2"]
        result = self._run(*args)
        self.assertEqual(result.returncode, 0, result.stderr)
        report = json.loads(result.stdout)["reports"][0]
        self.assertEqual(report["outcome"], "violated")
        self.assertEqual(report["counterexample"]["witness"], {"E": ["b"]})
        self.assertEqual(self._run(*args, "--strict").returncode, 1)

    def test_gen_iso_reduced(self):
        result = self._run("gen", "--exhaustive", "2", "--iso-reduce")
        self.assertEqual(result.returncode, 0, result.stderr)
        self.assertEqual(len(parse_apx_corpus(result.stdout)), 10)

    def test_gen_random_is_reproducible(self):
        first = self._run("gen", "--random", "n=5,count=4,seed=1")
        second = self._run("gen", "--random", "n=5,count=4,seed=1")
        self.assertEqual(first.stdout, second.stdout)
        self.assertEqual(len(parse_apx_corpus(first.stdout)), 4)

    def test_usage_errors(self):
        """Unknown tokens, bad corpora and missing options exit with 2."""
        self.assertEqual(self._run("solve", "--semantics", "nope", self.f1).returncode, 2)
        self.assertEqual(self._run("solve", self.f1).returncode, 2)
        self.assertEqual(self._run("verify", "--claim", "T1:adm:adm", "--corpus", "exhaustive:9").returncode, 2)
        self.assertEqual(self._run("verify", "--claim", "NOPE").returncode, 2)
        self.assertEqual(self._run("explain", "--semantics", "ud", "--set", "z", self.f1).returncode, 2)

    def test_parse_error(self):
        result = self._run("solve", "--semantics", "ud", self.broken)
        self.assertEqual(result.returncode, 3)
        self.assertIn("undeclared argument 'b'", result.stderr)
        self.assertEqual(result.stdout, "")


if __name__ == '__main__':
    unittest.main()
