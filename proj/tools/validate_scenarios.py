#!/usr/bin/env python3
"""Validate every scenario file in a directory against scenario.schema.json."""
import json
import pathlib
import sys

import jsonschema


def main() -> int:
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "scenarios")
    schema = json.loads((root / "scenario.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for path in sorted(root.glob("*.json")):
        if path.name == "scenario.schema.json":
            continue
        errors = list(validator.iter_errors(json.loads(path.read_text())))
        for err in errors:
            print(f"{path.name}: {err.message}")
        failures += bool(errors)
        print(f"{path.name}: {'invalid' if errors else 'ok'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
