"""End-to-end checks of the wlp command line: exit codes, report shape, determinism."""

import csv
import io
import json
import subprocess
import sys
import tempfile
from pathlib import Path

WLP = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([WLP, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def csv_rows(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


r = run("--version")
check("version", r.returncode == 0 and "0.1.0" in r.stdout, r.stdout + r.stderr)

r = run("blowup", "--case", "1", "--gamma", "0.5", "--r", "0.5", "--p", "1", "--n", "9,16,25,36,49")
check("blowup exit 0", r.returncode == 0, r.stderr)
rows = csv_rows(r.stdout)
ratios = [float(row["ratio"]) for row in rows]
check("blowup rows", len(rows) == 5, r.stdout)
check("blowup ratios strictly increasing", all(b > a for a, b in zip(ratios, ratios[1:])), str(ratios))
check("csv embeds config and version", "# wlp 0.1.0" in r.stdout and "# config" in r.stdout, r.stdout[:200])

r = run("blowup", "--case", "2", "--a", "2", "--r", "0.6", "--n", "5")
check("inadmissible r exits 2", r.returncode == 2, f"{r.returncode} {r.stderr}")
r = run("blowup", "--bogus")
check("unknown flag exits 2", r.returncode == 2, str(r.returncode))
r = run("frobnicate")
check("unknown subcommand exits 2", r.returncode == 2, str(r.returncode))
r = run("distortion", "--a", "2", "--r", "0.1", "--N", "16", "--p", "1")
check("unsupported p exits 2", r.returncode == 2, str(r.returncode))

r = run("distortion", "--a", "2", "--r", "0.02,0.05,0.1,0.2", "--N", "64", "--format", "json")
check("distortion exit 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
dist = [row["distortion"] for row in doc["results"]["reports"]]
check("distortion increasing in r", all(b > a for a, b in zip(dist, dist[1:])), str(dist))
check("json embeds config and version", doc["version"] == "0.1.0" and doc["config"]["N"] == 64, str(doc)[:200])

with tempfile.TemporaryDirectory() as tmp:
    outs = []
    for i in range(2):
        path = Path(tmp) / f"v{i}.json"
        r = run("verify", "--suite", "all", "--seed", "7", "--jobs", str(1 + 3 * i), "--format", "json", "--out", str(path))
        check(f"verify run {i} exit 0", r.returncode == 0, r.stderr[-2000:])
        outs.append(path.read_bytes())
    check("verify reports byte-identical", outs[0] == outs[1])
    doc = json.loads(outs[0])
    check("verify summary passed", doc["passed"] is True)

    a = run("chain-rule", "--r", "0.3", "--n", "20", "--trials", "5", "--seed", "3")
    b = run("chain-rule", "--r", "0.3", "--n", "20", "--trials", "5", "--seed", "3")
    check("chain-rule deterministic", a.returncode == 0 and a.stdout == b.stdout, a.stderr)

r = run("group-scan", "--n", "3,4,5,6", "--format", "json")
check("group-scan exit 0", r.returncode == 0, r.stderr)

tab = {"family": "tabulated", "params": {"lo": -2, "values": [1, 1, 1, 5, 1]}, "domain": "Z"}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(tab, fh)
r = run("weights-check", "--weight-file", fh.name, "--window", "2")
check("non-submultiplicative weight exits 1", r.returncode == 1, f"{r.returncode} {r.stdout} {r.stderr}")
r = run("weights-check", "--family", "subexp", "--gamma", "0.5")
check("subexp weight check exit 0", r.returncode == 0, r.stderr)
# max(1, |n|^2) only satisfies w(m+n) <= 4 w(m) w(n)
r = run("weights-check", "--family", "polynomial", "--a", "2", "--p", "2")
rows = {row["quantity"]: row["value"] for row in csv_rows(r.stdout)}
check("polynomial weight check exit 1", r.returncode == 1, f"{r.returncode} {r.stderr}")
check("polynomial max_ratio 4", abs(float(rows.get("max_ratio", "nan")) - 4.0) < 1e-12, str(rows))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
