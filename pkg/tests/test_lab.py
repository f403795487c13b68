import csv
import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path
from typing import TypedDict
from unittest import mock

from schurlab.common.errors import ConfigError, InfeasibleScaleError, SelftestFailure
from schurlab.lab import EXPERIMENTS, build_config, main, parse_config_text, render, run_experiment
from schurlab.lab.experiments import Experiment, Table
from schurlab.lab.experiments.base import check
from schurlab.lab.runner import run_selftest, sidecar_path

from tests.shared import temp_output_dir


class NoParams(TypedDict):
    pass


def run_cli(*argv: str) -> int:
    with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
        return main(["--quiet", *argv])


class TestConfigFile(unittest.TestCase):

    def test_parse(self):
        text = "# identity run\nnmax = 5   # small\n\nseed=3\nmax-size = 4\n"
        self.assertEqual(parse_config_text(text), {"nmax": "5", "seed": "3", "max_size": "4"})

    def test_malformed_lines(self):
        with self.assertRaises(ConfigError):
            parse_config_text("nmax 5")
        with self.assertRaises(ConfigError):
            parse_config_text("nmax = 5\nnmax = 6")


class TestBuildConfig(unittest.TestCase):

    def test_defaults_file_and_flags(self):
        experiment = EXPERIMENTS["identity"]
        config = build_config(experiment, {"nmax": "5", "seed": "9"}, {"nmax": "6", "seed": None})
        self.assertEqual(config.params, {"nmax": 6})
        self.assertEqual(config.context.seed, 9)
        self.assertEqual(config.output_format, "csv")
        self.assertIsNone(config.out)

    def test_rationals_and_lists(self):
        config = build_config(EXPERIMENTS["hl-moments"], {"t": "1/2", "xs": "1/5, 1/7"})
        self.assertEqual(config.params["t"], Fraction(1, 2))
        self.assertEqual(config.params["xs"], [Fraction(1, 5), Fraction(1, 7)])

    def test_rejections(self):
        identity = EXPERIMENTS["identity"]
        cases = [
            (identity, {"nmax": "twelve"}),
            (identity, {"nmax": "0"}),
            (identity, {"nmx": "4"}),
            (identity, {"format": "xml"}),
            (identity, {"seed": "-1"}),
            (identity, {"threads": "0"}),
            (EXPERIMENTS["hl-moments"], {}),
            (EXPERIMENTS["hl-moments"], {"t": "1/0"}),
        ]
        for experiment, values in cases:
            with self.subTest(values=values), self.assertRaises(ConfigError):
                build_config(experiment, values)

    def test_every_experiment_has_valid_defaults(self):
        for name, experiment in EXPERIMENTS.items():
            if name == "hl-moments":
                continue
            with self.subTest(name=name):
                config = build_config(experiment)
                self.assertEqual(set(config.params), set(experiment.annotations))


class TestRunner(unittest.TestCase):

    def test_identity_table(self):
        config = build_config(EXPERIMENTS["identity"], flag_values={"nmax": "6"})
        table = run_experiment(config)
        self.assertEqual(table.columns, ["N", "lhs", "rhs", "equal", "g_matches_count"])
        self.assertTrue(all(row["equal"] for row in table.rows))
        lines = render(config, table).splitlines()
        self.assertEqual(lines[0], "N,lhs,rhs,equal,g_matches_count")
        self.assertEqual(lines[3], "3,6,6,true,true")

    def test_json_embeds_config_and_summary(self):
        config = build_config(EXPERIMENTS["ascent"], {"mode": "exact", "n": "4", "format": "json"})
        document = json.loads(render(config, run_experiment(config)))
        self.assertEqual(document["config"]["subcommand"], "ascent")
        self.assertEqual(document["config"]["seed"], 1)
        self.assertEqual(document["columns"], ["h", "probability", "cdf"])
        self.assertEqual(document["rows"][-1]["cdf"], 1)
        self.assertIn("mean", document["config"]["summary"])

    def test_ascent_columns_follow_mode(self):
        ascent = EXPERIMENTS["ascent"]
        runs = {
            "census": {"n": "4"},
            "exact": {"n": "4"},
            "poissonized": {"xi": "2", "cutoff": "12"},
            "mc": {"n": "20", "samples": "10"},
            "mc-poissonized": {"xi": "5", "samples": "10"},
        }
        self.assertEqual(set(runs), set(ascent.mode_columns))
        help_text = ascent.column_help()
        for mode, flags in runs.items():
            with self.subTest(mode=mode):
                config = build_config(ascent, flag_values={"mode": mode, **flags})
                table = run_experiment(config)
                self.assertEqual(tuple(table.columns), ascent.columns_for(config.params))
                self.assertIn(f"{mode}: {', '.join(table.columns)}", help_text)
        self.assertEqual(EXPERIMENTS["identity"].column_help(),
                         "CSV columns: N, lhs, rhs, equal, g_matches_count")

    def test_selftest_failure(self):
        failing = Experiment(
            "broken", "always fails", NoParams, {}, (), lambda p, c: Table([], []),
            lambda p: None, lambda: [check("ok", True), check("bad", False)],
        )
        with self.assertRaises(SelftestFailure) as ctx:
            run_selftest(failing)
        self.assertEqual(ctx.exception.details["failed"], "bad")
        self.assertIn("failed=bad", ctx.exception.describe())


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self._dir = temp_output_dir()
        self.tmp = Path(self._dir.name)

    def tearDown(self):
        self._dir.cleanup()

    def test_identity_csv(self):
        out = self.tmp / "identity.csv"
        self.assertEqual(run_cli("identity", "--nmax", "8", "--out", str(out)), 0)
        with out.open(newline="") as f:
            rows = list(csv.DictReader(f))
        self.assertEqual([row["N"] for row in rows], [str(n) for n in range(1, 9)])
        self.assertTrue(all(row["equal"] == "true" for row in rows))
        self.assertEqual(rows[-1]["rhs"], "40320")
        self.assertIn(b"\r\n", out.read_bytes())
        sidecar = json.loads(sidecar_path(out).read_text())
        self.assertEqual(sidecar["config"]["nmax"], 8)

    def test_config_file_and_flag_precedence(self):
        config = self.tmp / "run.conf"
        config.write_text("nmax = 3\nformat = json\n")
        out = self.tmp / "identity.json"
        self.assertEqual(run_cli("identity", "--config", str(config), "--nmax", "4", "--out", str(out)), 0)
        document = json.loads(out.read_text())
        self.assertEqual(document["config"]["nmax"], 4)
        self.assertEqual(len(document["rows"]), 4)

    def test_default_output_directory(self):
        with mock.patch.dict("os.environ", {"SCHURLAB_OUTPUT_DIR": str(self.tmp / "results")}):
            self.assertEqual(run_cli("identity", "--nmax", "2"), 0)
        self.assertTrue((self.tmp / "results" / "identity.csv").exists())

    def test_replay_is_byte_identical(self):
        args = ("ascent", "--mode", "mc", "--n", "40", "--samples", "300", "--seed", "11")
        first, second = self.tmp / "a.csv", self.tmp / "b.csv"
        self.assertEqual(run_cli(*args, "--threads", "1", "--out", str(first)), 0)
        self.assertEqual(run_cli(*args, "--threads", "3", "--out", str(second)), 0)
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_census(self):
        out = self.tmp / "census.csv"
        self.assertEqual(run_cli("ascent", "--mode", "census", "--n", "6", "--out", str(out)), 0)
        with out.open(newline="") as f:
            rows = list(csv.DictReader(f))
        self.assertEqual(sum(int(row["count"]) for row in rows), 720)
        self.assertTrue(all(row["count"] == row["expected"] for row in rows))

    def test_exit_codes(self):
        self.assertEqual(run_cli("identity", "--nmax", "0"), ConfigError.exit_code)
        self.assertEqual(run_cli("identity", "--bogus", "1"), 2)
        self.assertEqual(run_cli("nosuch"), 2)
        self.assertEqual(run_cli("identity", "--config", str(self.tmp / "missing.conf")), 2)
        self.assertEqual(run_cli("ascent", "--mode", "census", "--n", "11",
                                 "--out", str(self.tmp / "x.csv")), InfeasibleScaleError.exit_code)
        self.assertEqual(InfeasibleScaleError.exit_code, 3)

    def test_selftest_exit_codes(self):
        self.assertEqual(run_cli("identity", "--selftest"), 0)
        failing = Experiment(
            "broken", "always fails", NoParams, {}, (), lambda p, c: Table([], []),
            lambda p: None, lambda: [check("bad", False)],
        )
        with mock.patch.dict(EXPERIMENTS, {"broken": failing}):
            self.assertEqual(run_cli("broken", "--selftest"), 4)


class TestSelftests(unittest.TestCase):

    def test_fast_selftests_pass(self):
        for name in ("qfun", "identity", "principal", "hl-moments"):
            with self.subTest(name=name):
                checks = run_selftest(EXPERIMENTS[name])
                self.assertTrue(checks)


if __name__ == "__main__":
    unittest.main()
