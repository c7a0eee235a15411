#!/usr/bin/env python3
"""Scan genera for admissible designs and rank them by bias gap and rate.

Example:
    python scripts/scan_designs.py --genus 5 11 --max 30 --min-gap 3
"""

import argparse
import sys
from fractions import Fraction

from aqsc.design import enumerate_admissible
from aqsc.geometry import Surface


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", nargs=2, type=int, default=(5, 11),
                    metavar=("LO", "HI"))
    ap.add_argument("--max", type=int, default=30, help="bound on p and q")
    ap.add_argument("--min-gap", type=int, default=0)
    ap.add_argument("--min-rate", type=Fraction, default=None)
    ap.add_argument("--orientable", action="store_true")
    ap.add_argument("--top", type=int, default=0,
                    help="keep only the best designs per genus")
    args = ap.parse_args()

    lo, hi = args.genus
    print("genus,p,q,record,gap,rate,n")
    for genus in range(lo, hi + 1):
        surface = Surface(genus, orientable=args.orientable)
        if not surface.is_hyperbolic:
            continue
        found = [cp for cp in enumerate_admissible(surface, args.max, args.max,
                                                   min_rate=args.min_rate)
                 if cp.gap >= args.min_gap]
        # biggest bias first, then cheapest qubit count
        found.sort(key=lambda cp: (-cp.gap, -cp.rate, cp.n))
        if args.top:
            found = found[:args.top]
        for cp in found:
            print(f"{genus},{cp.sym.p},{cp.sym.q},{cp.record},{cp.gap},"
                  f"{cp.rate},{cp.n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
