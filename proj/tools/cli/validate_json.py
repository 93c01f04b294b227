#!/usr/bin/env python3
"""Validate a tmh JSON document against one of the shipped schemas.

usage: validate_json.py SCHEMA [FILE]   (FILE defaults to stdin)
"""
import json
import sys

import jsonschema


def main(argv):
    if len(argv) not in (2, 3):
        print(__doc__.strip(), file=sys.stderr)
        return 2
    with open(argv[1]) as f:
        schema = json.load(f)
    if len(argv) == 3:
        with open(argv[2]) as f:
            document = json.load(f)
    else:
        document = json.load(sys.stdin)
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
    for e in errors:
        print(f"{'/'.join(map(str, e.path)) or '<root>'}: {e.message}", file=sys.stderr)
    # Round trip: re-serializing must give back the same document.
    if json.loads(json.dumps(document)) != document:
        print("document does not round-trip", file=sys.stderr)
        return 1
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
