#!/usr/bin/env python3
"""Emit the bound comparison table over an (m, n) grid as CSV.

Columns: the best exhaustive-witness t, its (mu, nu) witness, the
closed-form bound, the conjectural rational bound, and the gap between
conjecture and witness.  Deterministic: rows are (m, n) row-major.
"""

import argparse
import csv
import sys

from genlab.bounds import bound_grid


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min", type=int, default=2)
    ap.add_argument("--max", type=int, default=20)
    args = ap.parse_args()

    rng = range(args.min, args.max + 1)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["m", "n", "theorem_t", "witness_mu", "witness_nu",
         "corollary_t", "conjecture", "gap"]
    )
    for rep in bound_grid(rng, rng):
        mu, nu = rep.theorem_witness if rep.theorem_witness else ("", "")
        writer.writerow(
            [rep.m, rep.n, rep.theorem_t, mu, nu,
             rep.corollary_t, str(rep.conjecture), str(rep.gap)]
        )


if __name__ == "__main__":
    main()
