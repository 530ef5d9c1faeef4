#!/usr/bin/env python3
"""Print |C_mp| and |S| side by side for small shapes."""

import argparse

from cauchon.grid import GridShape, count_diagrams
from cauchon.perms import enumerate_restricted

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--max-sum", type=int, default=8, help="largest m + p")
args = parser.parse_args()

print(f"{'shape':>6} {'diagrams':>9} {'restricted':>11}")
for m in range(1, args.max_sum):
    for p in range(m, args.max_sum - m + 1):
        shape = GridShape(m, p)
        if shape.cells > 20:
            continue
        nd = count_diagrams(shape)
        ns = sum(1 for _ in enumerate_restricted(shape)) if m + p <= 9 else "-"
        print(f"{str(shape):>6} {nd:>9} {ns:>11}")
