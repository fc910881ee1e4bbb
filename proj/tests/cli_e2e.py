"""End-to-end checks of the polymaass CLI: exit codes, JSON/CSV payloads,
determinism, and config/flag precedence."""

import json
import math
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1] if len(sys.argv) > 1 else "./polymaass"
CHECKS = 0


def run(*args, env=None, expect=0):
    global CHECKS
    cp = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    assert cp.returncode == expect, (
        f"{args}: exit {cp.returncode} (wanted {expect})\nstderr: {cp.stderr}")
    CHECKS += 1
    return cp.stdout


def close(a, b, tol):
    assert abs(a - b) < tol, f"{a} vs {b} (tol {tol})"


# --- eval ------------------------------------------------------------------
out = json.loads(run("eval", "--weight", "0", "--z", "0,2", "--s", "0,0",
                     "--completion", "hathat"))
close(out["value"]["re"], 0.5, 1e-9)
close(out["value"]["im"], 0.0, 1e-9)

out = json.loads(run("eval", "--weight", "2", "--z", "0.3,1.1", "--s", "0,0",
                     "--completion", "hathat"))
close(out["value"]["re"], 0.0, 1e-9)

out = json.loads(run("eval", "--weight", "0", "--z", "0,1", "--s", "3,0",
                     "--path", "both"))
assert out["discrepancy"] < 1e-8
assert "fourier" in out["paths"] and "lattice" in out["paths"]

# usage / domain errors exit 2
run("eval", "--weight", "3", "--z", "0,1", "--s", "0,0", expect=2)
run("eval", "--weight", "0", "--z", "0,1", "--s", "0,0", "--completion", "raw",
    expect=2)  # weight-0 pole at s=0
run("eval", "--weight", "0", "--z", "0,1", "--s", "1,0", "--path", "lattice",
    expect=2)  # lattice needs Re(2s+k) > 2.5
run("nonsense", expect=2)
run("eval", "--weight", "0", expect=2)  # missing required flags

# --- taylor ----------------------------------------------------------------
out = json.loads(run("taylor", "--weight", "0", "--order", "1", "--z", "0,1",
                     "--family", "plain"))
close(out["value"]["re"], -0.05043984946395700, 1e-8)
assert out["name"] == "F"

out = json.loads(run("taylor", "--weight", "0", "--order", "0", "--z", "0,1",
                     "--family", "symmetrized"))
close(out["value"]["re"], 0.5, 1e-9)

# explicit series oracle for the symmetrized weight-2 order-1 value at z = i
sigma1 = lambda n: sum(d for d in range(1, n + 1) if n % d == 0)
series = sum(sigma1(n) * math.exp(-2 * math.pi * n) for n in range(1, 40))
g1_i = math.pi / 6 - 0.5 - 4 * math.pi * series
out = json.loads(run("taylor", "--weight", "2", "--order", "1", "--z", "0,1",
                     "--family", "symmetrized"))
close(out["value"]["re"], g1_i, 1e-9)
assert out["name"] == "G"

run("taylor", "--weight", "4", "--order", "1", "--z", "0,1",
    "--family", "symmetrized", expect=2)  # symmetrized needs weight 0 or 2

# --- ctable ----------------------------------------------------------------
zero_table = {
    (7, 0): (1, 1), (7, 6): (429, 1), (7, 7): (429, 1), (7, 8): (0, 1),
    (4, 3): (14, 1), (4, 4): (14, 1),
}
csv = run("ctable", "--weight", "2", "--boundary", "zero", "--nmax", "7")
rows = [line.split(",") for line in csv.strip().splitlines()[1:]]
table = {(int(r[0]), int(r[1])): (int(r[2]), int(r[3])) for r in rows}
for key, val in zero_table.items():
    assert table[key] == val, (key, table[key], val)
assert len(table) == sum(n + 2 for n in range(8))

csv = run("ctable", "--weight", "2", "--boundary", "binomial", "--nmax", "7")
tab2 = {(int(r[0]), int(r[1])): (int(r[2]), int(r[3]))
        for r in (line.split(",") for line in csv.strip().splitlines()[1:])}
assert tab2[(7, 8)] == (6435, 1)
assert tab2[(3, 2)] == (10, 1)

# weight-4 binomial entries are 3^-l C(n+l, l)
from fractions import Fraction
csv = run("ctable", "--weight", "4", "--boundary", "binomial", "--nmax", "3")
tab4 = {(int(r[0]), int(r[1])): (int(r[2]), int(r[3]))
        for r in (line.split(",") for line in csv.strip().splitlines()[1:])}
for (n, l), (num, den) in tab4.items():
    expect = Fraction(math.comb(n + l, l), 3 ** l)
    assert Fraction(num, den) == expect, ((n, l), (num, den), expect)

run("ctable", "--weight", "1", "--boundary", "zero", "--nmax", "3", expect=2)
run("ctable", "--weight", "0", "--boundary", "zero", "--nmax", "3", expect=2)

# --- dims ------------------------------------------------------------------
csv = run("dims", "--kmin", "0", "--kmax", "12", "--max-depth", "4")
lines = set(csv.strip().splitlines())
assert "12,4,3" in lines
assert "2,1,0" in lines
assert "0,1,1" in lines
run("dims", "--kmin", "0", "--kmax", "40", "--max-depth", "4", expect=2)

# --- verify ----------------------------------------------------------------
out = json.loads(run("verify", "--only", "eigenfunction", "--grid", "dense"))
assert out["all_pass"] is True
assert out["reports"][0]["identity"] == "eigenfunction"
assert out["reports"][0]["max_residual"] < out["reports"][0]["tolerance"]
assert len(out["reports"][0]["points"]) == 6

out = json.loads(run("verify", "--only", "ladder_02"))
assert out["all_pass"] is True

# the closed-form anchors record the rejected variant's residual in notes
out = json.loads(run("verify", "--only", "g1_series"))
assert out["all_pass"] is True
assert any("variant" in note for note in out["reports"][0]["notes"])

# fd_step round-trips from flag into the report parameters
out = json.loads(run("--fd-step", "0.005", "verify", "--only", "xi_fourier_term"))
assert "h=0.005" in out["reports"][0]["params"]

run("verify", "--only", "no_such_identity", expect=2)

# failure exit code 1 via a config-file tolerance override
with tempfile.TemporaryDirectory() as td:
    cfgpath = os.path.join(td, "impossible.cfg")
    with open(cfgpath, "w") as fh:
        fh.write("# impossible bar\ntolerance.eigenfunction = 1e-30\n")
    run("--config", cfgpath, "verify", "--only", "eigenfunction", expect=1)

    # config / flag precedence: flag wins over config, config over default
    with open(os.path.join(td, "run.cfg"), "w") as fh:
        fh.write("contour_nodes = 96\ncontour_radius = 0.3125\n")
    out = json.loads(run("--config", os.path.join(td, "run.cfg"), "taylor",
                         "--weight", "0", "--order", "0", "--z", "0,1",
                         "--family", "plain"))
    assert out["contour"]["nodes"] == 96
    assert out["contour"]["radius"] == 0.3125
    out = json.loads(run("--config", os.path.join(td, "run.cfg"),
                         "--contour-nodes", "64", "taylor", "--weight", "0",
                         "--order", "0", "--z", "0,1", "--family", "plain"))
    assert out["contour"]["nodes"] == 64
    assert out["contour"]["radius"] == 0.3125

    # the POLYMAASS_CONFIG environment variable names the config file
    env = dict(os.environ, POLYMAASS_CONFIG=os.path.join(td, "run.cfg"))
    out = json.loads(run("taylor", "--weight", "0", "--order", "0", "--z",
                         "0,1", "--family", "plain", env=env))
    assert out["contour"]["nodes"] == 96

    # bad config key is a usage error
    with open(os.path.join(td, "bad.cfg"), "w") as fh:
        fh.write("no_such_key = 3\n")
    run("--config", os.path.join(td, "bad.cfg"), "dims", expect=2)

    # --out writes the same payload to a file
    outpath = os.path.join(td, "t.json")
    direct = run("taylor", "--weight", "0", "--order", "0", "--z", "0,1",
                 "--family", "plain", "--out", outpath)
    assert direct == ""
    with open(outpath) as fh:
        assert json.loads(fh.read())["value"]["re"] == 0.5

# --- determinism -----------------------------------------------------------
a = run("taylor", "--weight", "2", "--order", "1", "--z", "0.2,1.2",
        "--family", "plain")
b = run("taylor", "--weight", "2", "--order", "1", "--z", "0.2,1.2",
        "--family", "plain")
assert a == b, "byte-identical output for identical invocations"
a = run("verify", "--only", "xi_fourier_term")
b = run("verify", "--only", "xi_fourier_term")
assert a == b

print(f"cli_e2e: {CHECKS} invocations passed")
