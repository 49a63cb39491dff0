#!/usr/bin/env python3
"""Render every census table to stdout or a file.

Equivalent to `conelines tables all`, kept as a script so the tables can
be regenerated without installing the entry point:

    python scripts/render_tables.py --format md --out tables.md
"""

import argparse
import sys

from conelines import __version__
from conelines.cli import render
from conelines.tables import all_tables


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("json", "csv", "md"), default="md")
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    text = render(all_tables(), args.format, {"version": __version__, "seed": 0})
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
