#!/usr/bin/env python3
"""Runs the CLI and validates its JSON output against the shipped schemas.

Usage: check_json_schema.py <cli-binary> <schema-dir> <scenario-dir>
"""
import json
import subprocess
import sys
from pathlib import Path

try:
    import jsonschema
    from jsonschema import Draft7Validator, RefResolver
except ImportError:
    print("jsonschema not installed; skipping validation")
    sys.exit(0)


def run_cli(cli, args):
    out = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
    if out.returncode != 0:
        raise SystemExit(f"CLI failed for {args}: {out.stderr}")
    return json.loads(out.stdout)


def main():
    cli, schema_dir, scenario_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schemas = {}
    for path in schema_dir.glob("*.schema.json"):
        schemas[path.name] = json.loads(path.read_text())
    store = {s.get("$id", name): s for name, s in schemas.items()}
    store.update({name: s for name, s in schemas.items()})

    def validate(doc, schema_name):
        schema = schemas[schema_name]
        resolver = RefResolver(base_uri=schema.get("$id", schema_name), referrer=schema,
                               store=store)
        Draft7Validator(schema, resolver=resolver).validate(doc)
        print(f"ok: {schema_name}")

    validate(run_cli(cli, ["count", "--state", "4:0000,4:0101,4:0000"]), "count.schema.json")
    validate(run_cli(cli, ["closed-form", "--state", "12:000000000000"]), "count.schema.json")
    validate(run_cli(cli, ["bell", "--state", "3:000", "--exhaustive"]), "bell.schema.json")
    validate(run_cli(cli, ["table1"]), "table1.schema.json")
    validate(run_cli(cli, ["cases", "--x-max", "3"]), "cases.schema.json")
    validate(run_cli(cli, ["simulate"]), "simulate.schema.json")
    validate(run_cli(cli, ["simulate", "--scenario",
                           str(scenario_dir / "four_photon_12qubit.json")]),
             "simulate.schema.json")

    # Determinism: identical invocations must produce byte-identical JSON.
    a = subprocess.run([cli, "table1", "--format", "json"], capture_output=True).stdout
    b = subprocess.run([cli, "table1", "--format", "json"], capture_output=True).stdout
    if a != b:
        raise SystemExit("table1 JSON output is not byte-identical across runs")
    print("ok: byte-identical table1 output")

    # Divergence from published values is a finding, not a failure: exit 0.
    r = subprocess.run([cli, "count", "--state", "4:0000,4:0101,4:0000"], capture_output=True)
    if r.returncode != 0:
        raise SystemExit("count exited nonzero on the discrepant state")
    print("ok: exit code 0 with documented divergence")


if __name__ == "__main__":
    main()
