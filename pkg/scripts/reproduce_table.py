#!/usr/bin/env python3
"""Reproduce the full dimension table (markdown to stdout by default).

Equivalent to `halfder table` with the default grid: the filiform-nilradical
rows at n = 4..6 plus the non-filiform families at their default ranges.
Pass --n 4:8 for the full verification grid, --format csv/json for other
encodings, and --out FILE to write to a file.
"""

import sys

from halfder.cli import main

if __name__ == "__main__":
    sys.exit(main(["table"] + sys.argv[1:]))
