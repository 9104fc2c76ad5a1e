"""
Test Suite for Reports and the Command Line
Tests verify/rtable/mu/search/selftest exit codes, report certificates and the search appender
"""

import io
import json
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from config import Settings, parse_run_config
from finite_fields import DEFAULT_MAX_FIELD_ORDER, set_max_field_order
from reporting import EXIT_FAILED, EXIT_INVALID, EXIT_OK, ReportDocument, SearchAppender, main, run_verification
from zassenhaus import PairRecord

COUNTEREXAMPLE = {"p": 7, "q": 19, "d": 3, "poly_p": [1, 3], "poly_q": [1, 2], "epsilon": [2, -1, 0]}


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["--log-level", "WARNING", *argv])
    return code, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):
    """Temporary directory with config helpers"""

    def setUp(self):
        """Create a scratch directory"""
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        """Remove the scratch directory"""
        self.tmp.cleanup()

    def write_config(self, name: str, data) -> str:
        path = self.dir / name
        path.write_text(data if isinstance(data, str) else json.dumps(data, indent=2))
        return str(path)


class TestVerifyCommand(CliTestCase):
    """Test the verify subcommand"""

    def test_known_counterexample_certifies(self):
        """Test the bundled parameters exit 0 with a sealed report"""
        out = self.dir / "report.json"
        code, _, _ = run_cli("verify", "--config", self.write_config("a.json", COUNTEREXAMPLE), "--out", str(out))
        self.assertEqual(code, EXIT_OK)
        report = ReportDocument.model_validate_json(out.read_text())
        self.assertTrue(report.is_counterexample)
        self.assertTrue(report.is_sealed)
        self.assertEqual(report.reasons, [])
        sides = {s.prime: s for s in report.sides}
        self.assertEqual(sides[7].inequalities, [0, 0, 7])
        self.assertEqual(sides[7].r_table_one_indexed, [2, 4, 1])
        self.assertEqual(sides[19].mu_cosets, [2, 14, 3])
        self.assertTrue(sides[7].assembly_character)
        self.assertTrue(sides[19].assembly_character)
        self.assertTrue(all(s.projective for a in sides[19].assemblies for s in a.summands))
        self.assertEqual(report.checks.family_inner_products, {"1": 36, "2": 6, "3": 18, "4": 1})

    def test_report_hash_is_deterministic(self):
        """Test two runs agree on the certificate hash"""
        cfg = self.write_config("a.json", COUNTEREXAMPLE)
        hashes = []
        for name in ("one.json", "two.json"):
            out = self.dir / name
            run_cli("verify", "--config", cfg, "--out", str(out))
            hashes.append(ReportDocument.model_validate_json(out.read_text()).certificate_sha256)
        self.assertEqual(hashes[0], hashes[1])
        self.assertEqual(len(hashes[0]), 64)

    def test_report_to_stdout(self):
        """Test the report is printed when no output path is given"""
        code, out, _ = run_cli("verify", "--config", self.write_config("a.json", COUNTEREXAMPLE))
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["is_counterexample"])

    def test_failing_vector(self):
        """Test failing rows exit 1 with reasons on stderr"""
        cfg = dict(COUNTEREXAMPLE, epsilon=[-1, 2, 0])
        code, _, err = run_cli("verify", "--config", self.write_config("bad.json", cfg))
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("reason: inequality row j=2 on the 7-side is -2", err)

    def test_trivial_support(self):
        """Test a unit vector exits 1"""
        cfg = dict(COUNTEREXAMPLE, epsilon=[1, 0, 0])
        code, out, _ = run_cli("verify", "--config", self.write_config("unit.json", cfg))
        self.assertEqual(code, EXIT_FAILED)
        self.assertFalse(json.loads(out)["is_counterexample"])

    def test_invalid_configs(self):
        """Test malformed, unknown-key, wrong-length and missing configs exit 2"""
        cases = {
            "broken.json": '{"p": 7,\n "q": 19,\n',
            "extra.json": dict(COUNTEREXAMPLE, colour="red"),
            "short.json": dict(COUNTEREXAMPLE, epsilon=[1, 0]),
        }
        for name, data in cases.items():
            code, _, err = run_cli("verify", "--config", self.write_config(name, data))
            self.assertEqual(code, EXIT_INVALID, name)
            self.assertIn("error:", err)
        code, _, err = run_cli("verify", "--config", str(self.dir / "missing.json"))
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("ConfigParseError", err)

    def test_unknown_command(self):
        """Test argparse failures exit 2"""
        code, _, _ = run_cli("frobnicate")
        self.assertEqual(code, EXIT_INVALID)

    def test_metrics_file(self):
        """Test the verdict counter lands in the metrics file"""
        metrics = self.dir / "run.prom"
        cfg = self.write_config("a.json", COUNTEREXAMPLE)
        code, _, _ = run_cli("--metrics-file", str(metrics), "verify", "--config", cfg, "--out", str(self.dir / "r.json"))
        self.assertEqual(code, EXIT_OK)
        self.assertIn('verdicts_total{outcome="counterexample"} 1.0', metrics.read_text())


class TestOtherCommands(CliTestCase):
    """Test rtable, mu, search and selftest"""

    def test_rtable(self):
        """Test the printed table and CSV rows for p = 7"""
        csv_path = self.dir / "r7.csv"
        code, out, _ = run_cli("rtable", "-p", "7", "-d", "3", "--poly", "1,3", "--csv", str(csv_path))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "(2, 4, 1)")
        rows = csv_path.read_text().splitlines()
        self.assertEqual(len(rows), 8)
        self.assertEqual(rows[4].split(","), ["3", "1", "1", "3", "0"])

    def test_rtable_bad_d(self):
        """Test d not dividing p^2 - 1 exits 2"""
        code, _, err = run_cli("rtable", "-p", "7", "-d", "5")
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("BadD", err)

    def test_mu(self):
        """Test both multiplicity tables are printed"""
        code, out, _ = run_cli("mu", "--config", self.write_config("a.json", COUNTEREXAMPLE))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("7-side: trivial=1 kernel-N=0 kernel-U=1 cosets=(0, 0, 7)", out)
        self.assertIn("19-side: trivial=1 kernel-N=0 kernel-U=1 cosets=(2, 14, 3)", out)

    def test_mu_negative(self):
        """Test negative multiplicities exit 1"""
        cfg = dict(COUNTEREXAMPLE, epsilon=[-1, 2, 0])
        code, _, _ = run_cli("mu", "--config", self.write_config("bad.json", cfg))
        self.assertEqual(code, EXIT_FAILED)

    def test_search(self):
        """Test the search writes one line per pair starting at (163, 167)"""
        out = self.dir / "pairs.txt"
        code, stdout, _ = run_cli("search", "-d", "3", "-M", "1", "--max", "200", "--out", str(out))
        self.assertEqual(code, EXIT_OK)
        lines = out.read_text().splitlines()
        self.assertEqual(lines[0], "163 167 3 1 0")
        self.assertEqual(len(lines), 8)
        self.assertIn("per-eps check required", stdout)

    def test_search_even_d(self):
        """Test even d exits 2"""
        code, _, _ = run_cli("search", "-d", "4", "-M", "1", "--max", "200", "--out", str(self.dir / "x.txt"))
        self.assertEqual(code, EXIT_INVALID)

    def test_selftest(self):
        """Test every oracle suite passes"""
        code, out, _ = run_cli("selftest")
        self.assertEqual(code, EXIT_OK)
        self.assertNotIn("FAIL", out)


class TestPairsRecheck(CliTestCase):
    """Test verify --pairs on written search output"""

    def setUp(self):
        """Write the search output for d = 3, M = 1 up to 230"""
        super().setUp()
        self.pairs = self.dir / "pairs.txt"
        code, _, _ = run_cli("search", "-d", "3", "-M", "1", "--max", "230", "--out", str(self.pairs))
        self.assertEqual(code, EXIT_OK)

    def test_search_output_reproduces(self):
        """Test every written record is recomputed with the same flag"""
        self.assertIn("211 223 3 1 1", self.pairs.read_text().splitlines())
        code, out, _ = run_cli("verify", "--pairs", str(self.pairs))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("211 223 3 1 1: ok", out)
        self.assertNotIn("MISMATCH", out)

    def test_effective_recheck(self):
        """Test the eps check is rerun on request"""
        code, out, _ = run_cli("verify", "--pairs", str(self.pairs), "--effective-check")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("211 223 3 1 1: ok (exhaustive eps check: 0 of 6 failed)", out)

    def test_flipped_flag_exits_1(self):
        """Test a hand-edited flag is reported"""
        text = self.pairs.read_text().replace("211 223 3 1 1", "211 223 3 1 0")
        self.pairs.write_text(text)
        code, out, _ = run_cli("verify", "--pairs", str(self.pairs))
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("211 223 3 1 0: MISMATCH recomputed 211 223 3 1 1", out)

    def test_malformed_file_exits_2(self):
        """Test a line that is not a record"""
        code, _, err = run_cli("verify", "--pairs", self.write_config("bad.txt", "1 2 3\n"))
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("BadRecord", err)

    def test_config_and_pairs_are_exclusive(self):
        """Test verify takes exactly one source"""
        code, _, _ = run_cli("verify", "--pairs", str(self.pairs), "--config", "a.json")
        self.assertEqual(code, EXIT_INVALID)


class TestFileErrors(CliTestCase):
    """Test unreadable and unwritable paths exit 2 with one error line"""

    def assert_io_failure(self, *argv):
        code, _, err = run_cli(*argv)
        self.assertEqual(code, EXIT_INVALID)
        self.assertTrue(err.startswith("error: "))
        self.assertIn("Error", err.splitlines()[0])

    def test_verify_out(self):
        """Test a report path in a missing directory"""
        cfg = self.write_config("a.json", COUNTEREXAMPLE)
        self.assert_io_failure("verify", "--config", cfg, "--out", str(self.dir / "missing" / "r.json"))

    def test_search_out(self):
        """Test a search output path in a missing directory"""
        self.assert_io_failure("search", "-d", "3", "-M", "1", "--max", "200",
                               "--out", str(self.dir / "missing" / "pairs.txt"))

    def test_rtable_csv(self):
        """Test a CSV path in a missing directory"""
        self.assert_io_failure("rtable", "-p", "7", "-d", "3", "--csv", str(self.dir / "missing" / "r.csv"))

    def test_missing_pairs_file(self):
        """Test a pairs file that does not exist"""
        self.assert_io_failure("verify", "--pairs", str(self.dir / "nothing.txt"))


class TestEnvironmentLimits(CliTestCase):
    """Test settings read from the environment by the command line"""

    def setUp(self):
        """Save the variables the tests override"""
        super().setUp()
        self.saved = {key: os.environ.get(key) for key in ("ZASSENHAUS_MAX_FIELD_ORDER", "ZASSENHAUS_RANDOM_SEED")}

    def tearDown(self):
        """Restore the variables and the field size limit"""
        for key, value in self.saved.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value
        set_max_field_order(DEFAULT_MAX_FIELD_ORDER)
        super().tearDown()

    def test_field_above_limit(self):
        """Test a field larger than the configured limit exits 2"""
        os.environ["ZASSENHAUS_MAX_FIELD_ORDER"] = "100"
        code, _, err = run_cli("rtable", "-p", "19", "-d", "3")
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("FieldTooLarge", err)
        code, _, _ = run_cli("rtable", "-p", "7", "-d", "3")
        self.assertEqual(code, EXIT_OK)

    def test_negative_seed(self):
        """Test a negative seed is a configuration error"""
        os.environ["ZASSENHAUS_RANDOM_SEED"] = "-1"
        code, _, err = run_cli("search", "-d", "3", "-M", "1", "--max", "200", "--out", str(self.dir / "p.txt"))
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn("Configuration error", err)


class TestPipeline(unittest.TestCase):
    """Test run_verification directly"""

    def test_requested_aux_primes(self):
        """Test the side prime is skipped among requested auxiliary primes"""
        report = run_verification(parse_run_config(json.dumps(COUNTEREXAMPLE)), Settings(), aux_primes=[19, 5])
        sides = {s.prime: s for s in report.sides}
        self.assertEqual([a.aux_prime for a in sides[7].assemblies], [19, 5])
        self.assertEqual([a.aux_prime for a in sides[19].assemblies], [5])
        self.assertEqual(sides[19].assemblies[0].degree, 43320)

    def test_checks_can_be_disabled(self):
        """Test disabling assemblies leaves only the verdict"""
        cfg = dict(COUNTEREXAMPLE, options={"checks": {"assemblies": False}})
        report = run_verification(parse_run_config(json.dumps(cfg)), Settings())
        self.assertTrue(report.is_counterexample)
        self.assertTrue(all(s.assemblies == [] and s.assembly_character is None for s in report.sides))

    def test_tampering_breaks_the_seal(self):
        """Test editing a sealed report is detected"""
        report = run_verification(parse_run_config(json.dumps(COUNTEREXAMPLE)), Settings())
        self.assertTrue(report.is_sealed)
        report.reasons.append("edited")
        self.assertFalse(report.is_sealed)


def test_appender_retries_transient_errors(mocker, tmp_path):
    """Test a failed write is retried once and then succeeds"""
    appender = SearchAppender(tmp_path / "pairs.txt")
    handle = mocker.mock_open().return_value
    mocked = mocker.patch('reporting.appender.open', side_effect=[OSError("busy"), handle], create=True)
    appender(PairRecord(163, 167, 3, 1, False))
    assert mocked.call_count == 2
    assert appender.written == 1
    handle.write.assert_called_once_with("163 167 3 1 0\n")


def test_appender_gives_up(mocker, tmp_path):
    """Test persistent write failures surface after three attempts"""
    appender = SearchAppender(tmp_path / "pairs.txt")
    mocked = mocker.patch('reporting.appender.open', side_effect=OSError("full"), create=True)
    with pytest.raises(OSError):
        appender(PairRecord(163, 167, 3, 1, False))
    assert mocked.call_count == 3
    assert appender.written == 0


if __name__ == '__main__':
    unittest.main()
