"""Desk-scale verification: counts, the Bruhat interval, the pipe-dream
bijection and the three-way agreement of minor families."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from cauchon.grid import BoundError, CauchonDiagram, GridShape, count_diagrams, enumerate_diagrams
from cauchon.minors import MinorFamily, minor_family
from cauchon.perms import (
    Permutation,
    all_permutations,
    block_longest,
    bruhat_leq,
    diagram_to_permutation,
    enumerate_restricted,
    longest_element,
    permutation_to_diagram,
)
from cauchon.restoration import vanishing_set
from cauchon.tnn import cell_witness

EXHAUSTIVE_CELL_BOUND = 9
BRUHAT_SIZE_BOUND = 8
DEFAULT_SAMPLE = 200


@dataclass(frozen=True)
class CountReport:
    shape: GridShape
    diagrams: int
    restricted: int

    @property
    def equal(self) -> bool:
        return self.diagrams == self.restricted


def verify_counts(shape: GridShape) -> CountReport:
    return CountReport(shape, count_diagrams(shape), sum(1 for _ in enumerate_restricted(shape)))


@dataclass(frozen=True)
class IntervalReport:
    shape: GridShape
    lhs: int
    rhs: int
    equal: bool


def verify_bruhat_interval(shape: GridShape, bound: int = BRUHAT_SIZE_BOUND) -> IntervalReport:
    """Check {w0 * w : w in S} == {y : y >= block_longest(m, p)} over all of S_N."""
    n = shape.m + shape.p
    if n > bound:
        raise BoundError(f"m + p = {n} exceeds bound {bound}")
    w0 = longest_element(n)
    base = block_longest(shape.m, shape.p)
    lhs = {w0 * w for w in enumerate_restricted(shape)}
    rhs = {y for y in all_permutations(n) if bruhat_leq(base, y)}
    return IntervalReport(shape, len(lhs), len(rhs), lhs == rhs)


@dataclass(frozen=True)
class BijectionReport:
    shape: GridShape
    diagrams: int
    images: int
    onto: bool
    inverse_ok: bool
    anchors_ok: bool

    @property
    def ok(self) -> bool:
        return self.onto and self.inverse_ok and self.anchors_ok and self.images == self.diagrams


def verify_bijection(shape: GridShape) -> BijectionReport:
    diagrams = list(enumerate_diagrams(shape))
    images = [diagram_to_permutation(d) for d in diagrams]
    restricted = set(enumerate_restricted(shape))
    inverse_ok = all(permutation_to_diagram(w, shape) == d for d, w in zip(diagrams, images))
    n = shape.m + shape.p
    top = Permutation(tuple(range(shape.m + 1, n + 1)) + tuple(range(1, shape.m + 1)))
    anchors_ok = (
        diagram_to_permutation(CauchonDiagram.all_white(shape)) == Permutation.identity(n)
        and diagram_to_permutation(CauchonDiagram.all_black(shape)) == top
    )
    return BijectionReport(shape, len(diagrams), len(set(images)), set(images) == restricted, inverse_ok, anchors_ok)


@dataclass(frozen=True)
class EquivalenceRecord:
    diagram: CauchonDiagram
    permutation: Permutation
    family: MinorFamily
    vanishing: MinorFamily
    zero_set: MinorFamily
    tnn_consistent: bool = True
    diff: dict = field(default_factory=dict, compare=False)

    @property
    def all_equal(self) -> bool:
        return self.tnn_consistent and self.family == self.vanishing == self.zero_set

    @property
    def verdict(self) -> str:
        return "all-equal" if self.all_equal else "mismatch"


def _symdiff(a: MinorFamily, b: MinorFamily) -> list[str]:
    return [str(ix) for ix in sorted(a.members ^ b.members)]


def equivalence_record(diagram: CauchonDiagram, trials: int = 5, samples: int = 10, seed: int = 0, field=None) -> EquivalenceRecord:
    w = diagram_to_permutation(diagram)
    family = minor_family(w, diagram.shape)
    vanishing = vanishing_set(diagram, trials, field, seed).vanishing
    cell = cell_witness(diagram, samples, seed, vanishing=vanishing)
    zero_set = cell.witness.zero_set
    diff = {}
    if family != vanishing:
        diff["family^vanishing"] = _symdiff(family, vanishing)
    if family != zero_set:
        diff["family^zero_set"] = _symdiff(family, zero_set)
    if not cell.consistent:
        diff["tnn_samples"] = sorted({str(sorted(map(str, z.members))) for z in cell.zero_sets})
    return EquivalenceRecord(diagram, w, family, vanishing, zero_set, cell.consistent, diff)


def _record_task(args):
    diagram, trials, samples, seed, field = args
    return equivalence_record(diagram, trials, samples, seed, field)


def select_diagrams(shape: GridShape, sample: Optional[int] = None, seed: int = 0) -> list[CauchonDiagram]:
    """All diagrams, or a seeded uniform sample of ``sample`` distinct ones
    kept in enumeration order."""
    diagrams = list(enumerate_diagrams(shape))
    if sample is None or sample >= len(diagrams):
        return diagrams
    picked = sorted(random.Random(seed).sample(range(len(diagrams)), sample))
    return [diagrams[k] for k in picked]


def verify_equivalence(
    shape: GridShape,
    trials: int = 5,
    sample: Optional[int] = None,
    seed: int = 0,
    samples: int = 10,
    field=None,
    workers: int = 1,
) -> Iterator[EquivalenceRecord]:
    """Yield one record per diagram, in enumeration order.

    Shapes above the exhaustive bound are sampled (``DEFAULT_SAMPLE``
    diagrams) unless ``sample`` is given.
    """
    if sample is None and shape.cells > EXHAUSTIVE_CELL_BOUND:
        sample = DEFAULT_SAMPLE
    tasks = [(d, trials, samples, seed, field) for d in select_diagrams(shape, sample, seed)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            yield from pool.map(_record_task, tasks, chunksize=8)
    else:
        for t in tasks:
            yield _record_task(t)


def distinct_vanishing_sets(shape: GridShape, trials: int = 5, seed: int = 0) -> bool:
    seen = set()
    for d in enumerate_diagrams(shape):
        fam = vanishing_set(d, trials, seed=seed).vanishing.members
        if fam in seen:
            return False
        seen.add(fam)
    return True
