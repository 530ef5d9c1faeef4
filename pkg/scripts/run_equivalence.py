#!/usr/bin/env python3
"""Run the three-way equivalence over several shapes and print a summary.

Shapes above 9 cells are sampled (200 diagrams by default).
"""

import argparse
import time

from cauchon.grid import GridShape
from cauchon.harness import verify_equivalence

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("shapes", nargs="*", default=["2x2", "2x3", "3x3", "3x4", "4x4"])
parser.add_argument("--seed", type=int, default=0)
parser.add_argument("--trials", type=int, default=5)
parser.add_argument("--samples", type=int, default=10)
parser.add_argument("--sample", type=int, default=None)
parser.add_argument("--workers", type=int, default=1)
args = parser.parse_args()

failed = False
for spec in args.shapes:
    m, p = map(int, spec.split("x"))
    t0 = time.perf_counter()
    records = list(
        verify_equivalence(GridShape(m, p), args.trials, args.sample, args.seed, args.samples, workers=args.workers)
    )
    bad = [r for r in records if not r.all_equal]
    failed |= bool(bad)
    print(f"{spec:>5}: {len(records) - len(bad)}/{len(records)} all-equal  ({time.perf_counter() - t0:.1f}s)")
    for r in bad[:5]:
        print("   mismatch", r.diagram.rows(), r.diff)

raise SystemExit(1 if failed else 0)
