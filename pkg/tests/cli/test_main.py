import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from bergman_spaces.cli.main import EXIT_CONFIG, EXIT_FAILED, EXIT_NUMERIC, EXIT_OK, build_parser, main
from bergman_spaces.cli.output import read_rows
from bergman_spaces.core.errors import NumericError, ParameterError


class TestMain(unittest.TestCase):
    """Test the bergman command line"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)
        self.out = str(self.root / "out")

    def tearDown(self):
        self.tmp.cleanup()

    def write_config(self, text):
        path = self.root / "run.ini"
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_parser(self):
        """Subcommands and their options"""
        parser = build_parser()
        args = parser.parse_args(["lemma-checks", "--lemma", "6", "-vv"])
        self.assertEqual((args.lemma, args.verbose, args.all), (6, 2, False))
        args = parser.parse_args(["quadrature-bench", "--methods", "product-rule,monte-carlo"])
        self.assertEqual(args.methods, ["product-rule", "monte-carlo"])
        args = parser.parse_args(["compare", "--record"])
        self.assertEqual(args.golden_mode, "record")

    def test_parser_rejects(self):
        """argparse rejects unknown sections and methods"""
        parser = build_parser()
        for argv in (["lemma-checks"], ["lemma-checks", "--lemma", "11"], ["quadrature-bench", "--methods", "simpson"],
                     ["compare", "--record", "--verify"]):
            with self.assertRaises(SystemExit):
                parser.parse_args(argv)

    @patch("bergman_spaces.cli.experiments.run_compare", return_value=EXIT_FAILED)
    def test_status_passthrough(self, run_compare):
        """The runner's status is the exit status"""
        self.assertEqual(main(["compare", "--output-dir", self.out]), EXIT_FAILED)
        config = run_compare.call_args[0][0]
        self.assertEqual(str(config.output_dir), self.out)

    def test_config_error(self):
        """Config errors exit with status 2"""
        path = self.write_config("[params]\np = x\n")
        self.assertEqual(main(["compare", "--config", path, "--output-dir", self.out]), EXIT_CONFIG)

    @patch("bergman_spaces.cli.experiments.run_lemma_checks", side_effect=ParameterError("bad"))
    def test_parameter_error(self, _):
        """Parameter errors exit with status 2"""
        self.assertEqual(main(["lemma-checks", "--all", "--output-dir", self.out]), EXIT_CONFIG)

    @patch("bergman_spaces.cli.experiments.run_sharpness", side_effect=NumericError("no convergence", {"x": 1}))
    def test_numeric_error(self, _):
        """Numeric failures exit with status 3"""
        with self.assertLogs("bergman_spaces.cli.main", level="ERROR") as logs:
            self.assertEqual(main(["sharpness", "--output-dir", self.out]), EXIT_NUMERIC)
        self.assertIn("no convergence", logs.output[0])

    @patch("bergman_spaces.cli.experiments.run_operator_probe", return_value=EXIT_OK)
    def test_grid_file(self, run_probe):
        """--grid reads the probe grid"""
        path = self.write_config("[probe]\na = 0\nb = 1\np = 1\n")
        self.assertEqual(main(["operator-probe", "--grid", path, "--output-dir", self.out]), EXIT_OK)
        config = run_probe.call_args[0][0]
        self.assertEqual(config.section("probe").get_floats("b"), [1.0])

    @patch("bergman_spaces.cli.experiments.run_lemma_checks", return_value=EXIT_OK)
    def test_lemma_selection(self, run_lemmas):
        """--lemma selects one section and --all selects every one"""
        main(["lemma-checks", "--lemma", "8", "--output-dir", self.out])
        self.assertEqual(run_lemmas.call_args[0][1], [8])
        main(["lemma-checks", "--all", "--output-dir", self.out])
        self.assertIsNone(run_lemmas.call_args[0][1])

    def test_theorem1_run(self):
        """An end-to-end run writes the table and is reproducible"""
        self.assertEqual(main(["theorem1", "--output-dir", self.out]), EXIT_OK)
        table = Path(self.out) / "theorem1.csv"
        first = table.read_bytes()
        rows = {row["label"]: row for row in read_rows(table)}
        self.assertAlmostEqual(float(rows["z"]["radial"]), 1.0 / 12.0, delta=1e-12)
        self.assertAlmostEqual(float(rows["z"]["invariant"]), 1.0 / 3.0, delta=1e-12)
        self.assertEqual(rows["z"]["reduction_identical"], "true")
        self.assertEqual(main(["theorem1", "--output-dir", self.out]), EXIT_OK)
        self.assertEqual(table.read_bytes(), first)

    def test_record_and_verify(self):
        """Recorded goldens verify, and a changed golden fails"""
        golden = self.root / "goldens"
        path = self.write_config(f"[run]\ngolden_dir = {golden}\n\n[family]\nz = poly n=1 {{(1):1}}\n")
        self.assertEqual(main(["theorem1", "--config", path, "--output-dir", self.out, "--record"]), EXIT_OK)
        self.assertEqual(main(["theorem1", "--config", path, "--output-dir", self.out, "--verify"]), EXIT_OK)
        stored = golden / "v1" / "theorem1.json"
        payload = json.loads(stored.read_text(encoding="utf-8"))
        payload["digest"] = "0" * 64
        stored.write_text(json.dumps(payload), encoding="utf-8")
        self.assertEqual(main(["theorem1", "--config", path, "--output-dir", self.out, "--verify"]), EXIT_FAILED)


if __name__ == '__main__':
    unittest.main()
