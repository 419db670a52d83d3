#!/usr/bin/env python3
"""Run each subcommand once and validate its JSON against schemas/<name>.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("td", ["td", "named:P_4"]),
    ("td", ["td", "-k", "4", "grid(4,4)"]),
    ("decompose", ["decompose", "-p", "2", "grid(4,4)"]),
    ("count", ["count", "--pattern", "named:K_3", "named:Petersen"]),
    ("count", ["count", "--method", "bruteforce", "--pattern", "P_3", "K_4"]),
    ("density", ["density", "--measure", "grad", "-r", "1", "Petersen"]),
    ("density", ["density", "--measure", "topgrad", "-r", "1", "sub_1(K_4)"]),
    ("density", ["density", "--measure", "immgrad", "-r", "1", "C_5"]),
    ("density", ["density", "--measure", "nabla0", "K_4"]),
    ("density-profile", ["--format", "json", "density-profile", "--family", "trees", "--sizes", "1,5"]),
    ("dncolor", ["dncolor", "-n", "3", "C_6"]),
    ("cover", ["cover", "-r", "1", "Petersen"]),
    ("oddset", ["oddset", "K_4"]),
    ("hom", ["hom", "C_5", "K_3"]),
    ("hom", ["hom", "K_3", "Clebsch"]),
    ("core", ["core", "C_4"]),
    ("dual-check", ["dual-check", "--pattern", "K_3", "--dual", "Clebsch", "C_5", "K_4"]),
    ("choosable", ["choosable", "-k", "2", "K_{2,4}"]),
    ("choosable", ["choosable", "-k", "2", "C_4"]),
    ("scan", ["scan", "--s", "5", "--t", "4", "--q", "2", "Petersen"]),
    ("error", ["td", "--exact-limit", "5", "named:K_8"]),
    ("error", ["frobnicate"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        text = proc.stderr if name == "error" else proc.stdout
        try:
            jsonschema.validate(json.loads(text), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {' '.join(args)}: {exc}")
            continue
        print(f"ok   {' '.join(args)}")
    # verify-ltd reads the decompose output back
    tmp = Path("verify_ltd_input.json")
    tmp.write_text(subprocess.run([binary, "decompose", "-p", "2", "P_9"], capture_output=True,
                                  text=True, check=True).stdout)
    proc = subprocess.run([binary, "verify-ltd", "-p", "2", "--coloring", str(tmp), "P_9"],
                          capture_output=True, text=True, check=False)
    try:
        jsonschema.validate(json.loads(proc.stdout),
                            json.loads((schema_dir / "verify-ltd.schema.json").read_text()))
        print("ok   verify-ltd")
    except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
        failures += 1
        print(f"FAIL verify-ltd: {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
