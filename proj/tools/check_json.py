"""Run `szabo compute --json` and validate the output against pages.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli = sys.argv[1]
schema = json.loads((pathlib.Path(__file__).parent / "pages.schema.json").read_text())
for args in (["--torus", "3,4", "--reduced"], ["--fixture", "4_1"], ["--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "--quotient"]):
    out = subprocess.run([cli, "compute", "--json", *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
print("json output valid")
