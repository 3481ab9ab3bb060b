"""Runs the CLI and validates every JSON output against schemas/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])


def schema(name):
    return json.loads((schema_dir / f"{name}.schema.json").read_text())


def run(*args):
    res = subprocess.run([cli, *args], capture_output=True, text=True)
    if res.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {res.returncode}: {res.stderr}")
    return res.stdout


cases = [
    ("enumeration", ["enumerate", "--space", "M0"]),
    ("enumeration", ["enumerate", "--space", "quadric", "--mu", "3/2"]),
    ("enumeration", ["enumerate", "--space", "M2", "--delta", "2/5,1/5"]),
    ("enumeration", ["enumerate", "--space", "M3", "--delta", "1/2,1/5,1/10", "--toric"]),
    ("region", ["region", "--l", "2", "--delta", "2/5,1/5"]),
    ("region", ["region", "--l", "3", "--delta", "1/2,1/5,1/10"]),
    ("region", ["region", "--l", "4", "--delta", "1/2,1/5,1/10,1/20"]),
    ("polygon", ["polygon", "--space", "M2", "--delta", "2/5,1/5", "--config-index", "1"]),
    ("polygon", ["polygon", "--space", "quadric", "--mu", "2"]),
    ("mutation_graph", ["mutation-graph", "--space", "M3", "--delta", "1/2,1/5,1/10", "--path", "0", "5"]),
    ("realization", ["realize", "--space", "M3", "--delta", "6/15,5/15,4/15"]),
    ("taut", ["taut", "--seq", "1,-2,-3,-3,-2,-3,-2", "--format", "json"]),
    ("taut", ["taut", "--seq", "1,1,0", "--format", "json"]),
]

failures = 0
for name, args in cases:
    try:
        jsonschema.validate(json.loads(run(*args)), schema(name))
        print(f"ok   {name}: {' '.join(args)}")
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {name}: {' '.join(args)}: {e.message}")

with tempfile.TemporaryDirectory() as tmp:
    manifest = pathlib.Path(tmp) / "m.json"
    artifact = pathlib.Path(tmp) / "a.json"
    run("--manifest", str(manifest), "count", "--space", "M2", "--delta", "2/5,1/5")
    run("selftest", "--artifact", str(artifact))
    for name, path in [("manifest", manifest), ("selftest", artifact)]:
        try:
            jsonschema.validate(json.loads(path.read_text()), schema(name))
            print(f"ok   {name}")
        except jsonschema.ValidationError as e:
            failures += 1
            print(f"FAIL {name}: {e.message}")

sys.exit(1 if failures else 0)
