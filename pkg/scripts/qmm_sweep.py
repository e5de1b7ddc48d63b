"""Sweep the master identity check over alphabet sizes and degrees."""

import argparse
import sys
import time

from rightq import qmm_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-r", type=int, default=1)
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--variant", choices=["q", "one", "strong"], default="strong")
    args = ap.parse_args()
    all_ok = True
    print("r\tdegree\tterms\tsteps\tok\tseconds")
    for r in range(args.min_r, args.max_r + 1):
        start = time.perf_counter()
        report = qmm_check(r, args.max_degree, args.variant)
        elapsed = time.perf_counter() - start
        all_ok = all_ok and report.ok
        for row in report.per_degree:
            print(
                f"{r}\t{row.degree}\t{row.term_count_before_reduction}"
                f"\t{row.rewrite_steps}\t{'true' if row.ok else 'false'}"
                f"\t{elapsed:.2f}"
            )
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
