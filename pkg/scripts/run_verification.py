#!/usr/bin/env python3
"""Run the complete verification suite and exit nonzero on any failure.

Equivalent to `e6poly all`; pass --force to include the heavy opt-in
checks and --json for machine-readable output.
"""

import sys

from e6poly.cli import main

if __name__ == "__main__":
    sys.exit(main(["all", *sys.argv[1:]]))
