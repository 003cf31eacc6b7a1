#!/usr/bin/env python3
"""Tabulate kernel dimensions of the cubic operator against the
binomial difference and the irreducible dimension sums.

Usage: kernel_table.py [MAX_DEGREE]   (default 5)
"""

import sys
from math import comb

from e6poly.decomp import phi_dim, weyl_sum_check


def main() -> None:
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    header = f"{'m':>2}  {'dim A_m':>10}  {'rank D':>8}  {'dim Phi_m':>10}  {'binomial':>10}  {'weyl sum':>10}"
    print(header)
    print("-" * len(header))
    for m in range(max_degree + 1):
        s = phi_dim(m)
        predicted = comb(m + 26, 26) - (comb(m + 23, 26) if m >= 3 else 0)
        print(
            f"{m:>2}  {s.dim_Am:>10}  {s.rank_D:>8}  {s.dim_phi:>10}  "
            f"{predicted:>10}  {s.weyl_sum:>10}"
        )
        terms = weyl_sum_check(m).terms
        parts = " + ".join(f"dim({m1},{m2})={d}" for m1, m2, d in terms)
        print(f"    {parts}")


if __name__ == "__main__":
    main()
