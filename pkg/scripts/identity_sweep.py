#!/usr/bin/env python3
"""Sweep the local minor identities (and their zero-pattern form) over a shape."""

import argparse
import random

from cauchon.fields import PrimeField
from cauchon.grid import GridShape, enumerate_diagrams
from cauchon.restoration import (
    admissible_pairs,
    local_identity_sweep,
    parameter_matrix,
    restoration_stages,
    sample_assignment,
    zero_criterion_holds,
)

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--m", type=int, default=3)
parser.add_argument("--p", type=int, default=3)
parser.add_argument("--assignments", type=int, default=3)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

shape = GridShape(args.m, args.p)
report = local_identity_sweep(shape, args.assignments, args.seed)
print(f"exact identities on {shape}: checked {report.checked}, failures {len(report.failures)}")

field = PrimeField()
rng = random.Random(args.seed)
pairs = list(admissible_pairs(shape))
bad = 0
for d in enumerate_diagrams(shape):
    stages = restoration_stages(field, parameter_matrix(field, d, sample_assignment(field, d, rng)))
    bad += sum(not zero_criterion_holds(field, stages, r, ix) for r, ix in pairs)
print(f"zero-pattern criterion on {shape}: {bad} failures")
