#!/usr/bin/env python3
"""Reproduce the isomer count table for a vertex range.

Usage: reproduce_counts.py [NMIN] [NMAX] [--workers W]

Prints the CSV table to stdout and per-row timing to stderr; exits nonzero
if any row disagrees with the embedded ground truth (when fixtures cover
the range).
"""
import argparse
import sys
import time

from pentasep.spiral import count_table, default_workers
from pentasep.tables import CSV_HEADER, FIXTURE_COUNTS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("nmin", type=int, nargs="?", default=20)
    ap.add_argument("nmax", type=int, nargs="?", default=60)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    workers = args.workers if args.workers is not None else default_workers()

    print(CSV_HEADER)
    bad = 0
    for n in range(args.nmin, args.nmax + 1, 2):
        t0 = time.time()
        (row,) = count_table([n], workers=workers)
        print(",".join(str(x) for x in row), flush=True)
        note = ""
        if n in FIXTURE_COUNTS:
            total, ipr = FIXTURE_COUNTS[n]
            if (row[2], row[3]) != (total, ipr):
                bad += 1
                note = f"  MISMATCH expected total={total} ipr={ipr}"
        print(f"# n={n}: {time.time() - t0:.1f}s{note}", file=sys.stderr)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
