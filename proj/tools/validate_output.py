#!/usr/bin/env python3
"""Run every command with a small configuration and validate the JSON against the schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

SMALL = {
    "trace": {"T": 0.05, "dt": 0.001, "kappa": 3.0, "format": "json"},
    "cardy": {"samples": 20, "dt": 0.01},
    "touch": {"samples": 20, "dt": 0.01},
    "same-swallow": {"samples": 20, "dt": 0.01},
    "dim": {"samples": 20, "dt": 0.01, "eps_count": 3},
    "zigzag1": {"samples": 20, "dt": 0.01, "dx_count": 2},
    "zigzag2": {"samples": 20, "dt": 0.01, "restart_dy": 0.1},
    "dipolar-avoid": {"samples": 10, "dt": 0.01, "T": 0.5},
    "restriction": {"samples": 10, "dt": 0.01},
    "annular-boundary": {"samples": 10, "dt": 0.01, "T": 0.2, "stride": 5},
    "martingale": {"samples": 20, "dt": 0.05, "times": [0.25, 0.5]},
    "virasoro-check": {"grade": 3},
}


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for command, params in SMALL.items():
            cfg = Path(tmp) / f"{command}.json"
            out = Path(tmp) / f"{command}.out.json"
            cfg.write_text(json.dumps({"command": command, **params, "out": str(out)}))
            proc = subprocess.run([cli, command, "--config", str(cfg)], capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"FAIL {command}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(json.loads(out.read_text())), key=str)
            if errors:
                print(f"FAIL {command}: {errors[0].message}")
                failures += 1
            else:
                print(f"ok   {command}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
