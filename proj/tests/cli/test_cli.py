#!/usr/bin/env python3
"""End-to-end checks of the oscillodx command line."""

import argparse
import csv
import hashlib
import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = None
SCHEMA = None


def run(*args, env=None, check_rc=None):
    full_env = dict(os.environ)
    full_env["SOURCE_DATE_EPOCH"] = "1700000000"
    if env:
        full_env.update(env)
    p = subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, env=full_env)
    if check_rc is not None and p.returncode != check_rc:
        raise AssertionError(f"{args}: rc={p.returncode}, expected {check_rc}\n{p.stdout}\n{p.stderr}")
    return p


def sha(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        cls.schema = json.loads(Path(SCHEMA).read_text())
        cls.sims = {}
        for model in ("wd", "lc", "forced"):
            out = cls.dir / f"{model}.csv"
            run("simulate", "--model", model, "--duration", 800, "--seed", 3, "--out", out, check_rc=0)
            cls.sims[model] = out

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def diagnose(self, model, *extra, rc=0):
        report = self.dir / f"{model}-{len(extra)}-{abs(hash(extra))}.json"
        p = run("diagnose", "--in", self.sims[model], "--channel", "x", "--report", report, *extra, check_rc=rc)
        return p, json.loads(report.read_text()) if report.exists() else None

    def test_simulate_csv_layout(self):
        rows = [r for r in self.sims["wd"].read_text().splitlines() if not r.startswith("#")]
        self.assertEqual(rows[0], "time,x,y")
        self.assertEqual(len(rows) - 1, 8000)

    def test_verdicts_and_schema(self):
        expected = {"wd": "weakly_damped", "lc": "limit_cycle", "forced": "forced"}
        for model, verdict in expected.items():
            _, doc = self.diagnose(model)
            jsonschema.validate(doc, self.schema)
            self.assertEqual(doc["diagnosis"]["verdict"], verdict, model)
            self.assertIn("ranking", doc)
        _, doc = self.diagnose("wd")
        self.assertNotIn("spike", doc["diagnosis"])
        _, doc = self.diagnose("forced")
        self.assertIn("spike", doc["diagnosis"])

    def test_schema_rejects_bad_report(self):
        _, doc = self.diagnose("lc")
        doc["diagnosis"]["verdict"] = "chaotic"
        with self.assertRaises(jsonschema.ValidationError):
            jsonschema.validate(doc, self.schema)

    def test_inconclusive_exit_code(self):
        _, doc = self.diagnose("wd")
        k = doc["diagnosis"]["kurtosis"]
        eps = max(abs(k["value"]), 0.01)
        self.assertLess(k["ci"]["lo"], eps)
        p, doc = self.diagnose("wd", "--flag-inconclusive", "--epsilon", eps, rc=5)
        self.assertEqual(doc["diagnosis"]["verdict"], "inconclusive")
        jsonschema.validate(doc, self.schema)
        # Without the flag the same straddle is only noted.
        _, doc = self.diagnose("wd", "--epsilon", eps)
        self.assertTrue(any(n.startswith("ci_straddles_threshold") for n in doc["diagnosis"]["notes"]))

    def test_usage_errors(self):
        run("simulate", "--model", "chaos", "--out", self.dir / "z.csv", check_rc=2)
        run("diagnose", "--in", self.sims["wd"], check_rc=2)
        run("nonsense", check_rc=2)
        self.assertEqual(run("--help").returncode, 0)

    def test_parse_error(self):
        bad = self.dir / "bad.csv"
        bad.write_text("time,a\n0,1\n0.1,oops\n0.2,3\n")
        p = run("kurtosis", "--in", bad, "--out", self.dir / "k.csv", check_rc=3)
        self.assertIn("bad.csv:3", p.stderr)
        self.assertIn("oops", p.stderr)

    def test_invalid_input(self):
        run("diagnose", "--in", self.sims["wd"], "--window", "0:5000", "--report", self.dir / "w.json", check_rc=4)
        short = self.dir / "short.csv"
        short.write_text("time,a\n" + "".join(f"{i * 0.1},{(i % 7) - 3}\n" for i in range(200)))
        run("diagnose", "--in", short, "--report", self.dir / "s.json", check_rc=4)
        run("simulate", "--model", "wd", "--dt", 0.5, "--gamma", 5, "--out", self.dir / "u.csv", check_rc=4)

    def test_byte_identical_reruns(self):
        a, b = self.dir / "r1.json", self.dir / "r2.json"
        for out in (a, b):
            run("diagnose", "--in", self.sims["forced"], "--report", out, "--noise-std", 1e-3, "--seed", 9, check_rc=0)
        self.assertEqual(sha(a), sha(b))
        s1, s2 = self.dir / "s1.csv", self.dir / "s2.csv"
        for out in (s1, s2):
            run("simulate", "--model", "lc", "--duration", 200, "--seed", 11, "--out", out, check_rc=0)
        self.assertEqual(sha(s1), sha(s2))

    def test_manifest(self):
        report = self.dir / "m.json"
        run("diagnose", "--in", self.sims["lc"], "--report", report, check_rc=0)
        man = json.loads(Path(str(report) + ".manifest.json").read_text())
        self.assertEqual(man["command"], "diagnose")
        self.assertEqual(man["inputs"][0]["sha256"], sha(self.sims["lc"]))
        self.assertEqual(man["outputs"][0]["sha256"], sha(report))
        self.assertEqual(man["timestamp"], "2023-11-14T22:13:20Z")
        self.assertIn("bootstrap_seed", man["seeds"])

    def test_psd(self):
        out = self.dir / "psd.csv"
        run("psd", "--in", self.sims["forced"], "--channel", "x", "--out", out, check_rc=0)
        rows = list(csv.DictReader(r for r in out.read_text().splitlines() if not r.startswith("#")))
        peak = max(rows[1:], key=lambda r: float(r["psd"]))
        self.assertAlmostEqual(float(peak["freq_hz"]), 0.15, delta=0.01)

    def test_kurtosis(self):
        out = self.dir / "k.csv"
        run("kurtosis", "--in", self.sims["forced"], "--out", out, check_rc=0)
        rows = list(csv.DictReader(out.read_text().splitlines()))
        self.assertEqual([r["channel"] for r in rows], ["x", "y"])
        self.assertLess(float(rows[0]["kurtosis"]), -1.0)
        mv = self.dir / "km.csv"
        run("kurtosis", "--in", self.sims["forced"], "--moving", "--window-len", 100, "--hop", 10, "--out", mv,
            check_rc=0)
        rows = list(csv.DictReader(r for r in mv.read_text().splitlines() if not r.startswith("#")))
        self.assertEqual(len(rows), (8000 - 1000) // 100 + 1)

    def test_locate(self):
        out = self.dir / "rank.csv"
        report = self.dir / "rank.json"
        run("locate", "--in", self.sims["forced"], "--out", out, "--report", report, check_rc=0)
        rows = list(csv.DictReader(r for r in out.read_text().splitlines() if not r.startswith("#")))
        self.assertEqual(sorted(r["rank"] for r in rows), ["1", "2"])
        jsonschema.validate(json.loads(report.read_text()), self.schema)

    def test_montecarlo(self):
        out = self.dir / "mc.csv"
        runs = self.dir / "mc_runs.csv"
        run("montecarlo", "--model", "forced", "--runs", 30, "--duration", 100, "--out", out, "--runs-out", runs,
            check_rc=0)
        hist = list(csv.DictReader(r for r in out.read_text().splitlines() if not r.startswith("#")))
        self.assertEqual(sum(int(r["count"]) for r in hist), 30)
        self.assertEqual(len(runs.read_text().splitlines()), 31)
        run("montecarlo", "--model", "forced", "--runs", 5, "--out", out, check_rc=4)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--binary", required=True)
    ap.add_argument("--schema", required=True)
    args, rest = ap.parse_known_args()
    BINARY, SCHEMA = args.binary, args.schema
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)
