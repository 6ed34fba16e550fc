#!/usr/bin/env python3
"""Write every fixture algebra and proof as JSON under a directory (default ./fixtures-out)."""
import sys

from srlkit.cli import main

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "fixtures-out"
    sys.exit(main(["fixtures", "export", "--dir", out]))
