#!/usr/bin/env python3

"""Command-line driver and verification suites."""

import contextlib
import io
import os
import tempfile
import unittest

import coalescent_zeta.core.config as config
import coalescent_zeta.core.logging as logging
import simplejson
from coalescent_zeta.algebra.polynomial import ZetaPolynomial
from coalescent_zeta.core import builders, cli
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.meters import CheckMeter
from coalescent_zeta.verify import suites
from parameterized import parameterized
from yacs.config import CfgNode


def _run(*argv):
    config.reset_cfg()
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue()


def _line(output, prefix):
    return next(line for line in output.splitlines() if line.startswith(prefix))


class TestTables(unittest.TestCase):
    def test_rows(self):
        code, out = _run("tables")
        self.assertEqual(code, 0)
        self.assertEqual(
            _line(out, "cumulant-t[3]:"), "cumulant-t[3]: 160-96ζ(2) | 160-16π^2 | 2.08633"
        )
        self.assertTrue(_line(out, "moment-t[5]:").endswith("| -224π^4-3200π^2+53760 | 357.62952"))
        self.assertTrue(_line(out, "gumbel-central[10]:").endswith("| 2036946.09776"))

    def test_json(self):
        code, out = _run("tables", "--format", "json")
        self.assertEqual(code, 0)
        rows = simplejson.loads(out)
        self.assertEqual(len(rows), 19)
        for row in rows:
            self.assertIsInstance(ZetaPolynomial.from_json(row["exact"]), ZetaPolynomial)


class TestCompute(unittest.TestCase):
    def test_cumulant(self):
        code, out = _run("compute", "cumulant-t", "--j", "2", "--digits", "5", "--form", "numeric")
        self.assertEqual((code, out.strip()), (0, "cumulant-t[2]: 1.15947"))

    def test_derangement(self):
        code, out = _run("compute", "derangement", "--n", "5", "--form", "zeta")
        self.assertEqual((code, out.strip()), (0, "derangement[5]: 44"))

    def test_tree_moment_both_routes(self):
        code, out = _run(
            "compute", "tree-moment", "--n", "12", "--j", "6", "--route", "both", "--format", "json"
        )
        self.assertEqual(code, 0)
        rows = simplejson.loads(out)
        self.assertEqual([r["route"] for r in rows], ["alternating", "ordered"])
        self.assertEqual(rows[0]["exact"], rows[1]["exact"])

    def test_s_multi_parts(self):
        code, out = _run("compute", "s-multi", "--parts", "2,2", "--form", "zeta")
        self.assertEqual(code, 0)
        self.assertIn("ζ(2)^2-ζ(4)", out)

    def test_rates(self):
        code, out = _run("compute", "transition", "--rates", "0,1,3", "--i", "3", "--j", "1", "--t", "1.0")
        self.assertEqual(code, 0)

    def test_opts_override(self):
        code, out = _run("compute", "zeta", "--k", "2", "--form", "numeric", "--opts", "NUMERIC.DIGITS", "8")
        self.assertEqual((code, out.strip()), (0, "zeta[2]: 1.64493407"))

    def test_cfg_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.yaml")
            with open(path, "w") as f:
                f.write("OUTPUT:\n  FORMAT: csv\n  FORM: numeric\n")
            code, out = _run("compute", "bell", "--i", "5", "--cfg", path)
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0].split(",")[:3], ["quantity", "index", "numeric"])

    def test_missing_argument(self):
        code, _ = _run("compute", "cumulant-t")
        self.assertEqual(code, 2)

    def test_guard_error_is_usage_error(self):
        code, _ = _run("compute", "zeta", "--k", "2", "--digits", "49", "--opts", "NUMERIC.MAX_DIGITS", "60")
        self.assertEqual(code, 0)
        code, _ = _run("compute", "zeta", "--k", "2", "--opts", "NUMERIC.MAX_DIGITS", "60", "NUMERIC.DIGITS", "55")
        self.assertEqual(code, 2)

    def test_unknown_quantity(self):
        with self.assertRaises(SystemExit) as ctx:
            _run("compute", "no-such-quantity")
        self.assertEqual(ctx.exception.code, 2)


class TestVerify(unittest.TestCase):
    def test_exact_suite_passes(self):
        code, out = _run("verify", "exact")
        self.assertEqual(code, 0)
        self.assertTrue(out.strip().endswith("0 failed"))

    def test_exact_suite_checks(self):
        meter = CheckMeter()
        suites.exact_suite(meter)
        passed = {r["name"] for r in meter.records if r["passed"]}
        for name in (
            "cumulant_t.cumulants_to_moments",
            "tree.cumulants_to_moments",
            "central_moments.n10",
            "s_coefficients.n10",
        ):
            self.assertIn(name, passed)

    def test_fault_injection(self):
        code, out = _run("verify", "exact", "--fault", "cumulants_t.j3.zeta")
        self.assertEqual(code, 1)
        self.assertTrue(_line(out, "FAIL cumulants_t.j3.zeta"))
        self.assertTrue(out.strip().endswith("1 failed"))

    def test_numeric_suite_passes(self):
        meter = CheckMeter()
        suites.numeric_suite(meter)
        failed = [r["name"] for r in meter.records if not r["passed"]]
        self.assertEqual(failed, [])
        names = {r["name"] for r in meter.records}
        self.assertIn("s_truncated.5", names)
        self.assertIn("asymptotics.central_moment_growth_closes", names)

    def test_errors_fail_the_check(self):
        meter = CheckMeter()
        record = suites.run_check(meter, "boom", _raise)
        self.assertFalse(record["passed"])

    @parameterized.expand([("exact", 1), ("simulation", 1), ("all", 3)])
    def test_suite_selection(self, name, count):
        self.assertEqual(len(builders.get_suites(name)), count)

    def test_unknown_suite(self):
        cfg.VERIFY.SUITE = "fast"
        with self.assertRaises(AssertionError):
            config.assert_and_infer_cfg()


def _raise():
    raise AssertionError("failed precondition")


class TestRunOutputs(unittest.TestCase):
    def test_config_is_dumped(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _ = _run("compute", "bell", "--i", "5", "--opts", "OUT_DIR", tmp)
            with open(os.path.join(tmp, cfg.CFG_DEST)) as f:
                dumped = CfgNode.load_cfg(f)
        self.assertEqual(code, 0)
        self.assertEqual(dumped.OUT_DIR, tmp)

    def test_suite_times_are_logged(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _ = _run("verify", "exact", "--opts", "OUT_DIR", tmp, "LOG_DEST", "file")
            with open(logging.log_file_path()) as f:
                lines = [line for line in f if "json_stats" in line]
            for handler in logging.logging.root.handlers:
                handler.close()
            logging.logging.root.handlers = []
        self.assertEqual(code, 0)
        times = [line for line in lines if '"_type": "suite_times"' in line]
        self.assertEqual(len(times), 1)
        self.assertIn("exact_suite", times[0])


if __name__ == "__main__":
    unittest.main()
