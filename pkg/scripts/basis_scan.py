"""Scan the basis dimension oracle over a grid of degrees."""

import argparse
import sys
import time

from rightq import check_basis_dimension


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--q", default="one", help="'one' or a nonzero rational like 3/5")
    args = ap.parse_args()
    all_match = True
    print("r\tdegree\tambient\trank\tquotient\tirreducible\tmatch\tseconds")
    for n in range(args.max_degree + 1):
        start = time.perf_counter()
        report = check_basis_dimension(args.r, n, args.q)
        elapsed = time.perf_counter() - start
        all_match = all_match and report.match
        print(
            f"{report.r}\t{report.degree}\t{report.ambient_dim}"
            f"\t{report.relation_rank}\t{report.quotient_dim}"
            f"\t{report.irreducible_count}"
            f"\t{'true' if report.match else 'false'}\t{elapsed:.2f}"
        )
    return 0 if all_match else 1


if __name__ == "__main__":
    sys.exit(main())
