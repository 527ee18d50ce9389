"""Runs every subcommand with --json and validates the output against schemas/."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

exe, schema_dir, data_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
zeros = str(data_dir / "zeta_zeros_100.txt")

runs = {
    "whitney": ["whitney", "--D", "64"],
    "bells": ["bells", "--D", "16", "--eta", "0.4", "--samples", "51"],
    "basis-check": ["basis", "check", "--D", "16", "--count", "8", "--intervals", "4096"],
    "decay-fit": ["decay", "fit", "--j", "1", "--k", "0", "--xi-max", "100", "--samples", "400"],
    "prolate": ["prolate", "--W", "0.5", "--T", "1"],
    "witness": ["witness", "--scheme", "rv", "--R1", "2", "--R2", "2", "--thin", "0.2", "--intervals", "4096"],
    "bound": ["bound", "--scheme", "zeta", "--zeros-file", zeros, "--R1-max", "1.1", "--R2-max", "50", "--step", "0.5",
              "--eps", "0.1"],
    "zeta": ["zeta", "--zeros-file", zeros, "--T-max", "200", "--eps", "0.1"],
}
extra = {"witness": [["witness", "--scheme", "rv", "--R1", "2", "--R2", "2", "--intervals", "4096"]]}

failed = 0
for name, args in runs.items():
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    for a in [args] + extra.get(name, []):
        proc = subprocess.run([exe, "--json", *a], capture_output=True, text=True)
        if proc.returncode not in (0, 2):
            print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {name} {' '.join(a[1:])}")
        except jsonschema.ValidationError as e:
            print(f"FAIL {name}: {e.message} at {list(e.absolute_path)}")
            failed += 1
sys.exit(1 if failed else 0)
