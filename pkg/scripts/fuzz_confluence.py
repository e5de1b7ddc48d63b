"""Fuzz random rewrite order against leftmost order on random biwords."""

import argparse
import sys
import time

from rightq import check_confluence_fuzz, system_by_name


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--system", choices=["s", "sq"], default="s")
    args = ap.parse_args()
    start = time.perf_counter()
    report = check_confluence_fuzz(
        args.r, args.max_len, args.trials, args.seed, system_by_name(args.system)
    )
    elapsed = time.perf_counter() - start
    print(f"system\t{report.system}")
    print(f"trials\t{report.trials}")
    print(f"counterexamples\t{len(report.counterexamples)}")
    for bw in report.counterexamples[:20]:
        print(f"counterexample\t{bw}")
    print(f"seconds\t{elapsed:.2f}")
    print(f"ok\t{'true' if report.ok else 'false'}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
