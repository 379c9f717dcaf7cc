"""Run the witness extractor over every 2-colouring of K_n.

Usage:
    python scripts/sweep_extract.py --m1 2 --m2 1 --n 7

Edge (0, 1) is fixed red; the swapped colourings are symmetric.
Prints how many witnesses came from the proof replay and how many from
the fallback scan.
"""

from __future__ import annotations

import argparse
import collections
import itertools
import time

from doublestar_ramsey import Colouring2, DoubleStarSpec, extract_trace, theorem_bound


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--m1", type=int, required=True)
    ap.add_argument("--m2", type=int, required=True)
    ap.add_argument("--n", type=int)
    args = ap.parse_args()
    spec = DoubleStarSpec(args.m1, args.m2)
    n = args.n or theorem_bound(spec)
    edges = list(itertools.combinations(range(n), 2))
    if len(edges) > 24:
        raise SystemExit(f"K_{n} has 2^{len(edges)} colourings; too many to sweep")

    steps = collections.Counter()
    t0 = time.perf_counter()
    for word in range(1, 1 << len(edges), 2):
        rows = [0] * n
        for k, (i, j) in enumerate(edges):
            if word >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        steps[extract_trace(Colouring2(n, tuple(rows)), spec).step] += 1
    total = sum(steps.values())
    print(f"{spec} on K_{n}: {total} colourings, steps {dict(sorted(steps.items()))}, "
          f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
