#!/usr/bin/env python3
"""Run the acceptance criteria and print one PASS/FAIL line each.

    python3 scripts/run_acceptance.py            # all eight
    python3 scripts/run_acceptance.py 2 6 --json
"""
import argparse
import json
import sys

from srlkit.suite import run_criterion


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("numbers", nargs="*", type=int, default=list(range(1, 9)))
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    results = [run_criterion(k) for k in args.numbers]
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
