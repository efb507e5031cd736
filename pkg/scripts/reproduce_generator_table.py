"""Scan -100..100 and compare the generator sets with the embedded table.

    python3 scripts/reproduce_generator_table.py --bound 1e6 --jobs 4
    python3 scripts/reproduce_generator_table.py --bound 1e100
"""

import argparse
import time

from monogen.cli import parse_bound
from monogen.golden import golden_generators
from monogen.pipeline import compare_with_golden, scan_range
from monogen.thue import ThueSearchConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=parse_bound, default=10**6)
    ap.add_argument("--from", dest="lo", type=int, default=-100)
    ap.add_argument("--to", dest="hi", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    results = scan_range(args.lo, args.hi, ThueSearchConfig(bound=args.bound), jobs=args.jobs)
    secs = time.perf_counter() - t0
    golden = golden_generators()
    for r in results:
        if r.error:
            print(f"n={r.n}: {r.error}")
        elif r.generators:
            tag = "table" if r.n in golden else "NOT IN TABLE"
            print(f"n={r.n:5d} {len(r.generators)} generators ({tag}) {list(r.generators)}")
    diff = compare_with_golden(results, golden)
    print(f"{len(results)} values of n in {secs:.1f}s; differences from the table: {len(diff)}")
    for n, g in diff.missing:
        print(f"  missing n={n} {g}")
    for n, g in diff.extra:
        print(f"  extra   n={n} {g}")


if __name__ == "__main__":
    main()
