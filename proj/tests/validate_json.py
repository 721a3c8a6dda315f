"""Runs each vgreen JSON command and validates its output against the schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["green", "--family", "t", "--n", "2", "--a", "1,1", "--relation", "r",
     "--method", "both", "--mode", "corrected", "--format", "json"],
    ["green", "--family", "is", "--n", "2", "--a", "1,2", "--relation", "d",
     "--method", "both", "--mode", "both", "--format", "json"],
    ["green", "--family", "is", "--n", "4", "--a", "1,2,3,4", "--relation", "h",
     "--format", "json", "--threshold", "3"],
    ["verify", "--family", "is", "--n", "3", "--all-a", "--format", "json"],
    ["verify", "--family", "t", "--n", "3", "--sample", "5", "--format", "json"],
    ["count", "--family", "is", "--n", "3", "--a", "1,2,-", "--format", "json"],
    ["count", "--family", "t", "--n", "3", "--a", "1,1,2", "--format", "json"],
    ["eggbox", "--family", "is", "--n", "3", "--a", "1,2,-", "--format", "json"],
    ["iso", "--n", "3", "--a", "1,2,-", "--b", "-,1,2", "--format", "json"],
    ["iso", "--n", "3", "--a", "1,2,-", "--b", "1,-,-", "--format", "json"],
    ["dual", "--n", "2", "--all-a", "--format", "json"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args in CASES:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        expected = 1 if "both" in args and "--mode" in args and args[args.index("--mode") + 1] == "both" else 0
        try:
            validator.validate(json.loads(proc.stdout))
            ok = proc.returncode == expected
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(getattr(e, "message", e))
            ok = False
        print(("ok   " if ok else "FAIL ") + " ".join(args))
        failed += not ok
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
