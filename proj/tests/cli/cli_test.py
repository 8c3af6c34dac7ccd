#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: output shapes, exit codes,
round trips and byte determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = 0


def run(*args, expect=0):
    global failures
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures += 1
        print(f"FAIL exit={proc.returncode} (wanted {expect}): {' '.join(args)}")
        print(proc.stderr.strip())
    return proc.stdout


def check(cond, what):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {what}")


# pascal triangle rows
out = run("show", "--riordan", "1/(1-x);x/(1-x)", "--order", "5")
check(out.splitlines() == ["1", "1  1", "1  2  1", "1  3  3  1", "1  4  6  4  1"],
      "pascal pretty rows")

# all-ones toeplitz triangle
out = run("show", "--toeplitz", "1,1,1,1,1", "--order", "5")
check(out.splitlines()[4] == "1  1  1  1  1", "toeplitz all-ones row")

# family listing
out = run("show", "--family", "bernoulli.numbers", "--order", "5")
check(out.splitlines() == ["1", "-1/2", "1/6", "0", "-1/30"], "bernoulli column")

# toeplitz inversion: 1/k! data inverts to alternating signs
out = run("invert", "--toeplitz", "1,1,1/2,1/6,1/24", "--order", "5")
check(out.strip() == "1, -1, 1/2, -1/6, 1/24", "factorial toeplitz inverse")

# riordan inversion as a pair
out = run("invert", "--riordan", "1;x/(1-x)", "--as-riordan", "--order", "4")
check(out.splitlines() == ["f: 1, 0, 0, 0", "h: 0, 1, -1, 1"], "riordan pair inverse")

# pascal times inverse pascal is the identity
out = run("mul", "riordan:1/(1-x);x/(1-x)", "riordan:1/(1+x);x/(1+x)", "--order", "4")
check(out.splitlines() == ["1", "0  1", "0  0  1", "0  0  0  1"], "pascal times inverse")

# json round trip: show --format json re-parses to the same triangle
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "t.json"
    run("show", "--riordan", "1/(1-x);x/(1-x)", "--order", "5", "--format", "json",
        "--output", str(path))
    doc = json.loads(path.read_text())
    check(doc["order"] == 5 and doc["entries"][4] == ["1", "4", "6", "4", "1"],
          "triangle json shape")
    again = run("show", "--json", str(path), "--format", "json")
    check(json.loads(again) == doc, "json round trip")

# verification subsets, globbing and exit codes
out = run("verify", "BERN_INV", "EULER_INV", "--order", "6")
check("PASS BERN_INV" in out and "PASS EULER_INV" in out, "verify two ids")
run("verify", "NO_SUCH_*", expect=2)
out = run("verify", "--all", "--order", "4", "--format", "json")
lines = [json.loads(line) for line in out.splitlines()]
check(len(lines) >= 40 and all(r["verdict"] == "pass" for r in lines), "verify --all json")
check(all("elapsed_ms" not in r for r in lines), "no timing by default")
out = run("verify", "BERN_INV", "--order", "6", "--format", "json", "--timing")
check("elapsed_ms" in json.loads(out.splitlines()[0]), "timing opt-in")

# identical invocations are byte-identical
a = run("verify", "--all", "--order", "4", "--format", "json")
b = run("verify", "--all", "--order", "4", "--format", "json")
check(a == b, "verify byte determinism")
a = run("show", "--riordan", "1/(1-q*x);x", "--order", "4", "--format", "json")
b = run("show", "--riordan", "1/(1-q*x);x", "--order", "4", "--format", "json")
check(a == b, "show byte determinism")

# catalog listing
out = run("list")
check("BERN_INV" in out and "BiE" in out, "catalog list mentions the equation tag")
out = run("list", "--families")
check("rogers_szego.R" in out and "q.binomial" in out, "family list")

# mathematical precondition failures exit with 3
run("invert", "--toeplitz", "0,1,2", "--order", "3", expect=3)
run("show", "--riordan", "x;x", "--order", "4", expect=3)

# parse failures exit with 2
run("show", "--riordan", "1/(1-x)", "--order", "4", expect=2)
run("show", "--toeplitz", "1,,2", "--order", "2", expect=2)
run("show", "--toeplitz", "1,1", "--order", "5", expect=2)
run("show", "--family", "no.such", "--order", "4", expect=2)
run("mul", "bogus:1", "toeplitz:1", expect=2)
run("bogus-subcommand", expect=2)
run("show", "--riordan", "1;x", "--order", "4", "--q-bound", "2", expect=2)

# pair-check round trip through files
with tempfile.TemporaryDirectory() as tmp:
    fa = Path(tmp) / "a.json"
    fb = Path(tmp) / "b.json"
    fa.write_text(json.dumps({"polys": ["1", "0", "0", "0"]}))
    fb.write_text(json.dumps({"polys": ["1", "0", "0", "0"]}))
    out = run("pair-check", str(fa), str(fb), "--order", "4")
    check(out.startswith("PASS"), "pair-check trivial tables")
    fb.write_text(json.dumps({"polys": ["1", "1", "1", "1"]}))
    out = run("pair-check", str(fa), str(fb), "--order", "4", expect=1)
    check(out.startswith("FAIL"), "pair-check mismatch fails")

# --help succeeds
run("--help")

if failures:
    print(f"{failures} cli checks failed")
    sys.exit(1)
print("all cli checks passed")
