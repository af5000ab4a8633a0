#!/usr/bin/env python3
"""Emit the feasibility frontier per (mu, nu, k) cell as CSV.

For each cell, scans D over a doubling grid and reports the smallest D
whose schedule satisfies delta <= U, or an empty field when no grid
point is feasible.  Cells with mu*nu <= mu+nu are infeasible for every
D; see the schedule module for the growth comparison.
"""

import argparse
import csv
import sys

from genlab.auxpoly import make_schedule


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-exp", type=int, default=4, help="smallest 2^e height")
    ap.add_argument("--max-exp", type=int, default=20, help="largest 2^e height")
    ap.add_argument("--max-mu", type=int, default=4)
    ap.add_argument("--max-nu", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=3)
    args = ap.parse_args()

    grid = [2**e for e in range(args.min_exp, args.max_exp + 1)]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["mu", "nu", "k", "frontier_D", "L", "M", "U"])
    for mu in range(1, args.max_mu + 1):
        for nu in range(1, args.max_nu + 1):
            for k in range(1, args.max_k + 1):
                hit = next(
                    (make_schedule(D, k, mu, nu) for D in grid
                     if make_schedule(D, k, mu, nu).feasible),
                    None,
                )
                if hit is None:
                    writer.writerow([mu, nu, k, "", "", "", ""])
                else:
                    writer.writerow([mu, nu, k, hit.D, hit.L, hit.M, f"{hit.U:.3f}"])


if __name__ == "__main__":
    main()
