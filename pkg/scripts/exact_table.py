"""Exact R(S(m1, m2)) for small double stars, next to the known bounds.

Usage:
    python scripts/exact_table.py [--max-m1 4] [--threads 1] [--budget N]
"""

from __future__ import annotations

import argparse
import time

from doublestar_ramsey import DoubleStarSpec, bounds_report, ramsey_exact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m1", type=int, default=4)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--budget", type=int, default=50_000_000)
    args = ap.parse_args()

    print(f"{'spec':>8} {'r_b':>4} {'eq1':>4} {'thm':>4} {'R':>5} {'nodes':>10} {'sec':>7}")
    for m1 in range(1, args.max_m1 + 1):
        for m2 in range(1, m1 + 1):
            spec = DoubleStarSpec(m1, m2)
            rep = bounds_report(spec)
            t0 = time.perf_counter()
            out = ramsey_exact(spec, budget=args.budget, threads=args.threads)
            dt = time.perf_counter() - t0
            value = out.ramsey_value if out.ramsey_value is not None else "?"
            thm = rep.theorem_bound if rep.theorem_bound is not None else "-"
            print(f"{str(spec):>8} {rep.r_b:>4} {rep.eq1_bound:>4} {thm:>4} {value:>5} "
                  f"{out.stats.nodes:>10} {dt:>7.2f}", flush=True)


if __name__ == "__main__":
    main()
