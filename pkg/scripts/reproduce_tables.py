#!/usr/bin/env python3
"""Regenerate every classification table, the verification report, and
the catalog exports into one directory.

The files this writes are exactly the command outputs, so a diff against
a previous run shows any change in the computed classification.
"""

import argparse
import contextlib
import io
import pathlib
import sys

from delpezzo.cli import run

SECTIONS = [
    ("quadric_table.txt", ["enumerate", "--case", "quadric"]),
    ("p2_bundles.txt", ["enumerate", "--case", "p2bundle"]),
    ("point_blowups.txt", ["enumerate", "--case", "blowup"]),
    ("rho3_p1p1.txt", ["enumerate", "--case", "rho3", "--surface", "p1p1"]),
    ("rho3_f2.txt", ["enumerate", "--case", "rho3", "--surface", "f2"]),
    ("highdim_4.txt", ["enumerate", "--case", "highdim", "--dim", "4"]),
    ("highdim_5.txt", ["enumerate", "--case", "highdim", "--dim", "5"]),
    ("highdim_6.txt", ["enumerate", "--case", "highdim", "--dim", "6"]),
    ("verify.txt", ["verify"]),
    ("catalog.json", ["export", "--format", "json"]),
    ("catalog.csv", ["export", "--format", "csv"]),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="build/tables", help="output directory")
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for fname, cmd in SECTIONS:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = run(cmd)
        (out / fname).write_text(buf.getvalue())
        print(f"wrote {out / fname} ({len(buf.getvalue())} bytes)")
        worst = max(worst, code)
    if worst:
        print("verification reported failures; see verify.txt", file=sys.stderr)
    return worst


if __name__ == "__main__":
    sys.exit(main())
