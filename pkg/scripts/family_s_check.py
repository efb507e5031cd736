"""Checks for the family S: closed-form basis, T-classes, no generators.

    python3 scripts/family_s_check.py --samples 20
    python3 scripts/family_s_check.py --all          # all 1110 members, slow
"""

import argparse
import time

from monogen.cli import default_s_samples, parse_bound
from monogen.cubicfield import index_form
from monogen.family import S_members
from monogen.pipeline import s_order, t_set, verify_family_s
from monogen.thue import ThueSearchConfig, solve


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--all", action="store_true")
    ap.add_argument("--bound", type=parse_bound, default=10**6)
    args = ap.parse_args()

    ns = S_members() if args.all else list(default_s_samples(args.samples))
    cfg = ThueSearchConfig(bound=args.bound)
    t0 = time.perf_counter()
    rep = verify_family_s(ns, cfg)
    print("identities:", rep.identities)
    t_ok = 0
    for n in ns:
        F = index_form(s_order(n)).form
        sols = solve(F, ThueSearchConfig(bound=max(abs(n) + 2, 10**3), strategy="exhaustive"))
        t_ok += set(sols.solutions) == set(t_set(n)) - {(0, 0)}
    print(f"{len(ns)} members; T exact for {t_ok}; generators found {sum(rep.spot_generators.values())}")
    print(f"index form sign relative to the closed form: {sorted(set(rep.form_sign.values()))}")
    print(f"passed: {rep.passed} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
