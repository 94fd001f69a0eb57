#!/usr/bin/env python3
"""End-to-end checks for the command line tool: report shapes, frozen values,
exit codes, and byte-level determinism of seeded runs."""
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
fails = []


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != expect:
        fails.append(f"{' '.join(args)}: exit {p.returncode}, wanted {expect}: {p.stderr.strip()}")
        return None
    return p.stdout


def jrun(*args):
    out = run(*args)
    if out is None:
        return None
    try:
        return json.loads(out)
    except json.JSONDecodeError as e:
        fails.append(f"{' '.join(args)}: bad JSON: {e}")
        return None


def check(cond, label):
    if not cond:
        fails.append(label)


def close(a, b, tol, label):
    check(abs(a - b) <= tol, f"{label}: {a} vs {b}")


# gamma: closed form with exact cross-check on the octagon
r = jrun("gamma", "--space", "regular:4")
if r:
    close(r["results"]["value"], 0.35355339059327373, 1e-9, "octagon gamma")
    check(r["results"]["method"] == "ClosedForm", "octagon method")
    check(r["results"]["cross_check"]["difference"] <= 1e-9, "octagon cross check")
    check(r["space"] == "regular:4", "octagon spec echo")

# gamma: smooth plane stays tiny, and is flagged as a lower bound
r = jrun("gamma", "--space", "lp:2:3")
if r:
    check(r["results"]["value"] <= 1e-3, "smooth gamma small")
    check(r["results"]["method"] == "GridEstimate", "smooth gamma method")
    check(r["results"]["bound"] == "lower", "smooth gamma bound")

# gamma: glued hexagon attains one half
r = jrun("gamma", "--space", "mix:l1-linf")
if r:
    close(r["results"]["value"], 0.5, 1e-9, "glued hexagon gamma")

# gamma: dimension-free sup-norm constant with a checkable witness
r = jrun("gamma", "--space", "linf:5")
if r:
    close(r["results"]["value"], 0.5, 1e-12, "sup norm gamma")
    close(r["results"]["cross_check"]["value"], 0.5, 1e-12, "sup norm witness value")

# derivative: frozen values
r = jrun("derivative", "--space", "linf:4", "--x", "1,1,1,1", "--y", "0,0,0,1")
if r:
    check(r["results"]["rho"] == 0.5, "sup norm derivative")
    check(r["results"]["method"] == "Exact", "sup norm derivative method")
    check(r["results"]["birkhoff"] is True, "sup norm derivative birkhoff")

r = jrun("derivative", "--space", "mix:lp(3)-l1", "--x", "1,0", "--y", "0,1")
if r:
    close(r["results"]["rho"], -0.5, 1e-9, "glued curved derivative")

r = jrun("derivative", "--space", "lp:2:2", "--x", "1,0", "--y", "0,1")
if r:
    close(r["results"]["rho"], 0.0, 1e-12, "euclidean basis derivative")
    check(r["results"]["rho_orthogonal"] is True, "euclidean basis orthogonal")

# classify: the six table rows plus an extreme point
TABLE = [
    ("l1:4", "1/2,0,0,-1/2", [], "LeftOnly"),
    ("l1:4", "1/2,1/3,0,-1/4", ["--normalize"], "RightOnly"),
    ("l1:4", "1/4,1/4,1/4,1/4", [], "Neither"),
    ("l1:4", "1,0,0,0", [], "Both"),
    ("linf:5", "1,1,0,0,-1", [], "LeftOnly"),
    ("linf:5", "1,1/2,1/5,-1,2/3", [], "RightOnly"),
    ("linf:5", "1,-1/3,1,1/3,1/7", [], "Neither"),
]
for space, x, extra, want in TABLE:
    r = jrun("classify", "--space", space, "--x", x, *extra)
    if r:
        check(r["results"]["label"] == want, f"classify {space} {x}: {r['results']['label']} != {want}")

# exit codes
run("classify", "--space", "l1:4", "--x", "1/2,1/3,0,-1/4", expect=4)
run("classify", "--space", "l1:3", "--x", "1,0", expect=4)  # dimension mismatch
run("classify", "--space", "regular:3", "--x", "1,0", expect=3)
run("gamma", "--space", "bogus:7", expect=2)
run("gamma", "--space", "lp:2", expect=2)
run("derivative", "--space", "l1:2", "--x", "1,zebra", "--y", "1,0", expect=2)
run("derivative", "--space", "l1:2", "--x", "0,0", "--y", "1,0", expect=4)
run("gamma", "--space", "lp:2:0.5", expect=4)

# polygon files
with tempfile.TemporaryDirectory() as tmp:
    good = os.path.join(tmp, "good.json")
    with open(good, "w") as f:
        json.dump({"vertices": [[1, 0], [0.7, 0.7], [0, 1]]}, f)
    r = jrun("gamma", "--space", f"polygon:{good}")
    if r:
        check(0.0 <= r["results"]["value"] <= 0.5 + 1e-9, "polygon gamma range")
        check(r["results"]["method"] == "ExactPolyhedral2D", "polygon gamma method")

    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write("{ not json")
    run("gamma", "--space", f"polygon:{bad}", expect=2)
    run("gamma", "--space", f"polygon:{tmp}/missing.json", expect=2)
    flat = os.path.join(tmp, "flat.json")
    with open(flat, "w") as f:
        json.dump({"vertices": [[1, 0], [-1, 0]]}, f)
    run("gamma", "--space", f"polygon:{flat}", expect=4)

# csv: one header row, one data row, stable columns
out = run("gamma", "--space", "regular:3", "--format", "csv")
if out:
    lines = out.strip().split("\n")
    check(len(lines) == 2, "csv line count")
    check("results.value" in lines[0].split(","), "csv header has value column")

# verify: reduced suite passes and seeded runs are byte-identical
a = run("verify", "--trials", "10", "--seed", "3")
b = run("verify", "--trials", "10", "--seed", "3")
if a is not None and b is not None:
    check(a == b, "verify determinism")
    doc = json.loads(a)
    check(doc["all_passed"] is True, "reduced verify passes")
    check(len(doc["criteria"]) == 12, "verify criterion count")
    check(all("seconds" not in c for c in doc["criteria"]), "no timings by default")

out = run("verify", "--trials", "10", "--seed", "3", "--timings")
if out:
    doc = json.loads(out)
    check(all("seconds" in c for c in doc["criteria"]), "timings flag adds seconds")

if fails:
    print(f"FAIL ({len(fails)})")
    for f in fails:
        print("  -", f)
    sys.exit(1)
print("all cli checks passed")
