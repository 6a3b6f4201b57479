"""Validates CLI output against the shipped JSON schemas with the reference
jsonschema implementation, independently of the C++ validator."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp)
        runs = [
            ("corridor_report", ["generate-corridor", "--n", "30", "--d", "2", "--seed", "3", "--record-every", "20"]),
            ("corridor_report", ["generate-corridor", "--n", "20", "--d", "3", "--seed", "4", "--record-every", "5"]),
            ("pm_report", ["generate-pm", "--n", "30", "--d", "2", "--seed", "5", "--record-every", "20"]),
        ]
        for i, (kind, args) in enumerate(runs):
            path = out / f"run{i}.json"
            subprocess.run([cli, *args, "--out", str(path)], check=True)
            report = json.loads(path.read_text())
            jsonschema.validate(report, schemas[kind])
            jsonschema.validate(report["image"], schemas["complex"])
    print("schemas ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
