#!/usr/bin/env python3
"""Enumerate singular vectors degree by degree and print each generator.

Usage: scan_singular.py [MAX_DEGREE]   (default 4; values above 5 get slow)
"""

import sys

from e6poly.polyops import format_poly
from e6poly.singular import enumerate_singular, idx_to_poly, singular_space


def main() -> None:
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for degree in range(max_degree + 1):
        scan = enumerate_singular(degree)
        print(f"degree {degree}: {scan.total} singular line(s)")
        for weight, dim in scan.lines:
            for vec in singular_space(degree, weight):
                body = format_poly(idx_to_poly(vec))
                if len(body) > 100:
                    body = body[:97] + "..."
                print(f"  weight {weight} (dim {dim}): {body}")


if __name__ == "__main__":
    main()
