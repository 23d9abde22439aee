#!/usr/bin/env python3
"""Emit a family of well-separated fullerenes as planar_code.

Usage: build_family.py D COUNT [-o FILE]

Builds the COUNT smallest members of the separation->=D family the cap
pipeline covers (hexagon counts h_threshold(D), h_threshold(D)+1, ...).
"""
import argparse
import sys

from pentasep.patches import build_separated, h_threshold
from pentasep.planarcode import write_planar_code
from pentasep.separation import pentagon_separation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("d", type=int)
    ap.add_argument("count", type=int)
    ap.add_argument("-o", "--output", default=None)
    args = ap.parse_args()

    h0 = h_threshold(args.d)
    fullerenes = []
    for h in range(h0, h0 + args.count):
        f = build_separated(args.d, h)
        sep = pentagon_separation(f).separation
        print(f"h={h}: {f.vertex_count} vertices, separation {sep}",
              file=sys.stderr)
        fullerenes.append(f)
    if args.output:
        with open(args.output, "wb") as fh:
            write_planar_code((f.graph for f in fullerenes), fh)
    else:
        write_planar_code((f.graph for f in fullerenes), sys.stdout.buffer)


if __name__ == "__main__":
    main()
