"""Exit codes, printed examples, manifests and byte-identical reruns of the CLI."""
import pathlib
import subprocess
import sys
import tempfile

cli = sys.argv[1]
failures = 0


def run(*args, env=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def check(name, cond, detail=""):
    global failures
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f": {detail}"))
    failures += not cond


r = run("count", "--space", "M2", "--delta", "2/5,1/5", "--method", "both")
check("count M2 both", r.returncode == 0 and r.stdout == "26 / 26\n", r.stdout + r.stderr)
r = run("count", "--space", "M2", "--delta", "2/5,1/5", "--toric", "--method", "both")
check("count M2 toric", r.returncode == 0 and r.stdout == "2 / 2\n", r.stdout)
r = run("count", "--space", "M3", "--delta", "6/15,5/15,4/15", "--toric")
check("count corrected M3 point", r.returncode == 0 and r.stdout == "4 / 4\n", r.stdout)
r = run("enumerate", "--space", "M0", "--format", "tsv")
check("enumerate M0", r.returncode == 0 and len(r.stdout.strip().splitlines()) == 4, r.stdout)
r = run("taut", "--seq", "1,-2,-3,-3,-2,-3,-2")
check("taut example", r.returncode == 0 and r.stdout.startswith("not def-taut;"), r.stdout)

for args in (["count", "--space", "M2", "--delta", "0.4,0.2"],
             ["count", "--space", "M2", "--delta", "2/5"],
             ["count", "--space", "M2", "--delta", "1/5,2/5"],
             ["enumerate", "--space", "quadric"],
             ["taut", "--seq", "1,x"],
             ["count", "--space", "M0", "--toric", "--method", "formula"],
             ["polygon", "--space", "M0", "--config-index", "3"],
             ["no-such-command"],
             []):
    r = run(*args)
    check("usage error: " + " ".join(args), r.returncode == 2, f"exit {r.returncode}")

r = run("count", "--space", "M5", "--delta", "1/2,1/5,1/10,1/20,1/40", "--method", "enumerate",
        env={"LCY_MAX_L": "4", "PATH": ""})
check("LCY_MAX_L caps l", r.returncode == 2 and "LCY_MAX_L" in r.stderr, r.stderr)

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    m = tmp / "m.json"
    r = run("--manifest", str(m), "enumerate", "--space", "M3", "--delta", "1/2,1/5,1/10", "--workers", "2")
    check("manifest written", r.returncode == 0 and m.exists(), r.stderr)
    r = run("replay", str(m))
    check("manifest replays", r.returncode == 0 and r.stdout.startswith("replay ok"), r.stdout + r.stderr)
    bad = m.read_text()
    idx = bad.index('"output_digest": "') + len('"output_digest": "')
    (tmp / "bad.json").write_text(bad[:idx] + ("0" if bad[idx] != "0" else "1") + bad[idx + 1:])
    r = run("replay", str(tmp / "bad.json"))
    check("tampered manifest is detected", r.returncode == 1, r.stdout)

    outs = [run("enumerate", "--space", "M4", "--delta", "7/10,1/5,1/20,1/40", "--workers", str(k)).stdout
            for k in (1, 4, 8)]
    check("enumerate output independent of workers", outs[0] == outs[1] == outs[2] and outs[0])

    a1, a2 = tmp / "a1.json", tmp / "a2.json"
    r1 = run("selftest", "--artifact", str(a1))
    r2 = run("selftest", "--artifact", str(a2))
    check("selftest passes", r1.returncode == 0 and r2.returncode == 0, r1.stdout)
    check("selftest artifacts byte-identical", a1.read_bytes() == a2.read_bytes() and r1.stdout == r2.stdout)

    svg, dot = tmp / "p.svg", tmp / "g.dot"
    r = run("polygon", "--space", "M2", "--delta", "2/5,1/5", "--config-index", "0", "--svg", str(svg))
    check("polygon svg", r.returncode == 0 and svg.read_text().startswith("<svg") and "viewBox" in svg.read_text())
    r = run("mutation-graph", "--space", "quadric", "--mu", "2", "--dot", str(dot))
    check("mutation graph dot", r.returncode == 0 and dot.read_text().startswith("graph"))

sys.exit(1 if failures else 0)
