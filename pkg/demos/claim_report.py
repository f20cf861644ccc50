"""Run the cheap half of the claim catalog and print a verdict table."""

import json
import sys

from omega.claims import run_suite

suites = sys.argv[1:] or ["arithmetic", "descriptor"]
for name in suites:
    for res in run_suite(name):
        params = json.dumps(res.params, sort_keys=True)
        print(f"{res.claim_id:4s} {res.verdict:7s} {params}")
