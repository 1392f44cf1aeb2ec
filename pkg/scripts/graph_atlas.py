#!/usr/bin/env python3
"""Tabulate commuting-graph statistics over a range of ground sizes.

For each n: vertex and edge counts, clique number, diameter (or the
component count when disconnected), and per-ideal diameters on request.

Usage:
    python3 scripts/graph_atlas.py [--min 2] [--max 5] [--ideals]
                                   [--cache-dir DIR] [--threads T]

n=6 takes a few minutes on one core; use --cache-dir to pay the build
cost once.
"""

import argparse
import sys

from invsemi import graph as gm
from invsemi.cli import CliContext


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min", type=int, default=2)
    ap.add_argument("--max", type=int, default=5)
    ap.add_argument("--ideals", action="store_true",
                    help="also print the diameter of every proper ideal")
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    ctx = CliContext(threads=args.threads, cache_dir=args.cache_dir)
    print(f"{'n':>3} {'vertices':>9} {'edges':>10} {'clique':>7}"
          f" {'diameter':>9}")
    for n in range(args.min, args.max + 1):
        g = ctx.full_graph(n)
        size, _ = gm.clique_number(g, threads=args.threads)
        res = gm.diameter(g, threads=args.threads)
        diam = (f"{res.value}" if res.value != gm.INFINITY
                else f"disc({len(res.components)})")
        print(f"{n:>3} {g.num_vertices:>9} {g.num_edges():>10} {size:>7}"
              f" {diam:>9}")
        if args.ideals:
            for r in range(1, n):
                sub = ctx.ideal_graph(n, r)
                rres = gm.diameter(sub, threads=args.threads)
                rd = (f"{rres.value}" if rres.value != gm.INFINITY
                      else f"disc({len(rres.components)})")
                print(f"      rank<={r}: {sub.num_vertices} vertices,"
                      f" diameter {rd}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
