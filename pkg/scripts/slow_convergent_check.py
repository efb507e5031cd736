"""Height bound 1e100 with the convergent strategy for selected n.

    python3 scripts/slow_convergent_check.py -14 0 13 55
"""

import sys
import time

from monogen.golden import golden_generators
from monogen.pipeline import analyze, compare_with_golden
from monogen.thue import ThueSearchConfig


def main(argv):
    ns = [int(a) for a in argv] or [-14, 0, 13]
    cfg = ThueSearchConfig(bound=10**100, strategy="convergent")
    golden = golden_generators()
    for n in ns:
        t0 = time.perf_counter()
        r = analyze(n, cfg)
        diff = compare_with_golden([r], golden)
        print(f"n={n}: {len(r.H)} Thue solutions, {len(r.generators)} generators, "
              f"table diff {len(diff)}, {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main(sys.argv[1:])
