#!/usr/bin/env python3
"""Table of class sizes up to isomorphism, up to each class's default cap."""
import argparse
import time

from srlkit.classes import CLASS_TAGS
from srlkit.enumerate import DEFAULT_CAPS, enumerate_class


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--classes", nargs="*", default=list(CLASS_TAGS))
    ap.add_argument("--labelled", action="store_true")
    args = ap.parse_args()
    for cls in args.classes:
        t0 = time.perf_counter()
        counts = [len(enumerate_class(n, cls, up_to_iso=not args.labelled))
                  for n in range(1, DEFAULT_CAPS[cls] + 1)]
        print(f"{cls:14s} {counts}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
