"""Commutative restoration / deleting-derivations algorithm and the
vanishing-minor oracle built on it.

Stages are positions of the step set E. The matrix at the first stage,
(1, 2) unless p = 1, is the parameter matrix (t); the matrix at stage (m, p+1) is the restored matrix.
A step at r = (j, b) connects stage r with its successor r+; the pivot is
x[j][b], which is the same at both stages.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Any, Optional

from cauchon.fields import PrimeField, RationalField, determinant
from cauchon.grid import (
    BoundError,
    CauchonDiagram,
    GridPos,
    GridShape,
    in_step_set,
    step_successor,
    steps,
)
from cauchon.minors import MinorFamily, MinorIndex, enumerate_minors

ORACLE_CELL_BOUND = 20


@dataclass(frozen=True)
class OracleMatrix:
    shape: GridShape
    entries: tuple[tuple[Any, ...], ...]
    stage: GridPos

    def __post_init__(self):
        if len(self.entries) != self.shape.m or any(len(r) != self.shape.p for r in self.entries):
            raise ValueError(f"entries do not match {self.shape}")
        if not in_step_set(self.stage, self.shape):
            raise ValueError(f"stage {self.stage} is not in the step set of {self.shape}")

    def __getitem__(self, pos: GridPos):
        i, a = pos
        return self.entries[i - 1][a - 1]

    def rows(self) -> list[list[Any]]:
        return [list(r) for r in self.entries]


def first_stage(shape: GridShape) -> GridPos:
    """Smallest element of E: the stage holding the parameter matrix."""
    if shape.p > 1:
        return (1, 2)
    return (2, 1) if shape.m > 1 else (1, 2)


def _predecessor(stage: GridPos, shape: GridShape) -> GridPos:
    if stage == (shape.m, shape.p + 1):
        return (shape.m, shape.p)
    i, a = stage
    if a > 1:
        return (i, a - 1)
    return (i - 1, shape.p)


def deleting_derivations_step(field, mat: OracleMatrix) -> OracleMatrix:
    """Go from stage r+ down to stage r, where r is the predecessor of the
    current stage."""
    shape = mat.shape
    if mat.stage == first_stage(shape):
        raise ValueError(f"stage {mat.stage} is the last deleting-derivations stage")
    j, b = r = _predecessor(mat.stage, shape)
    pivot = mat[r]
    if field.is_zero(pivot):
        return OracleMatrix(shape, mat.entries, r)
    inv = field.inv(pivot)
    rows = mat.rows()
    for i in range(1, j):
        corr = field.mul(mat[(i, b)], inv)
        for a in range(1, b):
            rows[i - 1][a - 1] = field.sub(rows[i - 1][a - 1], field.mul(corr, mat[(j, a)]))
    return OracleMatrix(shape, tuple(map(tuple, rows)), r)


def restoration_step(field, mat: OracleMatrix) -> OracleMatrix:
    """Go from stage r up to stage r+; inverse of :func:`deleting_derivations_step`."""
    shape = mat.shape
    r = mat.stage
    if r == (shape.m, shape.p + 1):
        raise ValueError("stage (m, p+1) is the last restoration stage")
    j, b = r
    nxt = step_successor(r, shape)
    pivot = mat[r]
    if field.is_zero(pivot):
        return OracleMatrix(shape, mat.entries, nxt)
    inv = field.inv(pivot)
    rows = mat.rows()
    for i in range(1, j):
        corr = field.mul(mat[(i, b)], inv)
        for a in range(1, b):
            rows[i - 1][a - 1] = field.add(rows[i - 1][a - 1], field.mul(corr, mat[(j, a)]))
    return OracleMatrix(shape, tuple(map(tuple, rows)), nxt)


def parameter_matrix(field, diagram: CauchonDiagram, values) -> OracleMatrix:
    """The first-stage matrix: given white-box values, zeros on black boxes.

    ``values`` maps white positions to nonzero field elements.
    """
    shape = diagram.shape
    rows = []
    for i in range(1, shape.m + 1):
        row = []
        for a in range(1, shape.p + 1):
            if diagram.is_black((i, a)):
                row.append(field.zero)
            else:
                v = field(values[(i, a)])
                if field.is_zero(v):
                    raise ValueError(f"white box {(i, a)} has a zero parameter")
                row.append(v)
        rows.append(tuple(row))
    return OracleMatrix(shape, tuple(rows), first_stage(shape))


def sample_assignment(field, diagram: CauchonDiagram, rng: random.Random) -> dict[GridPos, Any]:
    return {pos: field.sample_nonzero(rng) for pos in diagram.shape.positions() if not diagram.is_black(pos)}


def restoration_stages(field, start: OracleMatrix) -> dict[GridPos, OracleMatrix]:
    """Every stage of the restoration run, keyed by stage position.

    For a 1x1 grid there are no steps and the only stage is (1, 2).
    """
    out = {start.stage: start}
    mat = start
    for _ in steps(start.shape):
        mat = restoration_step(field, mat)
        out[mat.stage] = mat
    return out


def run_restoration(field, diagram: CauchonDiagram, values) -> OracleMatrix:
    mat = parameter_matrix(field, diagram, values)
    for _ in steps(diagram.shape):
        mat = restoration_step(field, mat)
    return mat


def run_deleting_derivations(field, mat: OracleMatrix) -> OracleMatrix:
    """Apply every deleting-derivations step, returning the first-stage matrix."""
    while mat.stage != first_stage(mat.shape):
        mat = deleting_derivations_step(field, mat)
    return mat


def submatrix_minor(field, rows, ix: MinorIndex):
    return determinant(field, [[rows[i - 1][a - 1] for a in ix.cols] for i in ix.rows])


def minor_value(field, mat: OracleMatrix, ix: MinorIndex):
    if not ix.fits(mat.shape):
        raise ValueError(f"minor {ix} does not fit {mat.shape}")
    return determinant(field, [[mat[(i, a)] for a in ix.cols] for i in ix.rows])


@dataclass(frozen=True)
class VanishingReport:
    diagram: CauchonDiagram
    vanishing: MinorFamily
    trials: int
    field: str
    seed: int


def trial_rng(seed: int, *key) -> random.Random:
    """Independent, reproducible stream for one (seed, key) pair."""
    digest = hashlib.sha256(repr((seed,) + key).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def vanishing_set(
    diagram: CauchonDiagram,
    trials: int = 5,
    field=None,
    seed: int = 0,
    bound: int = ORACLE_CELL_BOUND,
) -> VanishingReport:
    """Minors that vanish identically on the restored matrix, by evaluation at
    ``trials`` independent random points."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    shape = diagram.shape
    if shape.cells > bound:
        raise BoundError(f"{shape} has {shape.cells} cells, bound is {bound}")
    field = PrimeField() if field is None else field
    minors = list(enumerate_minors(shape))
    alive = set(minors)
    for t in range(trials):
        rng = trial_rng(seed, "vanish", shape.m, shape.p, diagram.mask, t)
        mat = run_restoration(field, diagram, sample_assignment(field, diagram, rng))
        rows = mat.rows()
        alive = {ix for ix in alive if field.is_zero(submatrix_minor(field, rows, ix))}
    return VanishingReport(diagram, MinorFamily(shape, frozenset(alive)), trials, field.describe(), seed)


# Local identities relating minors at consecutive stages.


def _lex_less(a: GridPos, b: GridPos) -> bool:
    return a < b


def criterion_case(stages: dict[GridPos, OracleMatrix], field, r: GridPos, ix: MinorIndex) -> tuple[int, Optional[int]]:
    """Which branch relates the minor at stages r and r+: returns ``(case, h)``.

    case 1: zero pivot; case 2: nonzero pivot and the step cannot touch the
    minor; case 3: nonzero pivot and column b falls strictly between
    cols[h-1] and cols[h] (1-based h, with cols[l] = p + 1) with all rows
    above j.
    """
    j, b = r
    last = (ix.rows[-1], ix.cols[-1])
    if not _lex_less(last, r):
        raise ValueError(f"minor {ix} is not below step {r}")
    if field.is_zero(stages[r][r]):
        return 1, None
    if ix.rows[-1] == j or b in ix.cols or b < ix.cols[0]:
        return 2, None
    h = max(k for k, a in enumerate(ix.cols, start=1) if a < b)
    return 3, h


def check_local_identity(diagram: CauchonDiagram, r: GridPos, ix: MinorIndex, values, field=None) -> bool:
    """Check the exact relation between the minor at stages r and r+.

    Cases 1 and 2 assert the two minors coincide. Case 3 asserts
    ``minor(r+) * u == minor(r) * u + swapped * x`` where u is the pivot,
    ``swapped`` is the minor at stage (j, cols[h]) with column cols[h]
    replaced by b, and x is the entry (j, cols[h]) at that stage.
    """
    field = RationalField() if field is None else field
    shape = diagram.shape
    r = tuple(r)
    if not shape.contains(r) or r == (1, 1):
        raise ValueError(f"{r} is not a step of the {shape} grid")
    if not ix.fits(shape):
        raise ValueError(f"minor {ix} does not fit {shape}")
    stages = restoration_stages(field, parameter_matrix(field, diagram, values))
    return _local_identity_holds(field, stages, r, ix)


def _local_identity_holds(field, stages, r: GridPos, ix: MinorIndex) -> bool:
    shape = next(iter(stages.values())).shape
    case, h = criterion_case(stages, field, r, ix)
    before = minor_value(field, stages[r], ix)
    after = minor_value(field, stages[step_successor(r, shape)], ix)
    if case in (1, 2):
        return before == after
    j, b = r
    ah = ix.cols[h - 1]
    u = stages[r][r]
    swapped_cols = tuple(sorted(set(ix.cols) - {ah} | {b}))
    inner = stages[(j, ah)]
    swapped = minor_value(field, inner, MinorIndex(ix.rows, swapped_cols))
    lhs = field.mul(after, u)
    rhs = field.add(field.mul(before, u), field.mul(swapped, inner[(j, ah)]))
    return lhs == rhs


def admissible_pairs(shape: GridShape):
    """All (step, minor) pairs whose minor lies strictly before the step."""
    minors = list(enumerate_minors(shape))
    for r in steps(shape):
        for ix in minors:
            if (ix.rows[-1], ix.cols[-1]) < r:
                yield r, ix


@dataclass
class SweepReport:
    shape: GridShape
    assignments: int
    checked: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def local_identity_sweep(
    shape: GridShape,
    assignments: int = 3,
    seed: int = 0,
    field=None,
    diagrams=None,
) -> SweepReport:
    """Run :func:`check_local_identity` on every diagram, admissible pair and
    ``assignments`` random parameter draws; counts are per criterion case."""
    from cauchon.grid import enumerate_diagrams

    field = RationalField() if field is None else field
    checked = {1: 0, 2: 0, 3: 0}
    failures = []
    pairs = list(admissible_pairs(shape))
    for d in diagrams if diagrams is not None else enumerate_diagrams(shape):
        for k in range(assignments):
            rng = trial_rng(seed, "identity", shape.m, shape.p, d.mask, k)
            stages = restoration_stages(field, parameter_matrix(field, d, sample_assignment(field, d, rng)))
            for r, ix in pairs:
                case, _ = criterion_case(stages, field, r, ix)
                checked[case] += 1
                if not _local_identity_holds(field, stages, r, ix):
                    failures.append({"diagram": d.rows(), "assignment": k, "step": list(r), "minor": str(ix), "case": case})
    return SweepReport(shape, assignments, checked, failures)


def zero_criterion_holds(field, stages, r: GridPos, ix: MinorIndex) -> bool:
    """Zero-pattern form of the three-case criterion at one generic point:
    whether the minor vanishes at stage r+ is decided by stage-r data."""
    shape = next(iter(stages.values())).shape
    case, h = criterion_case(stages, field, r, ix)
    after = field.is_zero(minor_value(field, stages[step_successor(r, shape)], ix))
    before = field.is_zero(minor_value(field, stages[r], ix))
    if case in (1, 2):
        return after == before
    j, b = r
    ah = ix.cols[h - 1]
    swapped_cols = tuple(sorted(set(ix.cols) - {ah} | {b}))
    inner = stages[(j, ah)]
    side = field.is_zero(minor_value(field, inner, MinorIndex(ix.rows, swapped_cols))) or field.is_zero(inner[(j, ah)])
    return after == (before and side)


def pivot_factorization_holds(field, stages, r: GridPos, ix: MinorIndex) -> bool:
    """For a minor whose last row and column meet at the step r = (j, b) with
    nonzero pivot: minor(r+) == minor(r) without row j and column b, times
    the pivot."""
    shape = next(iter(stages.values())).shape
    if (ix.rows[-1], ix.cols[-1]) != tuple(r):
        raise ValueError(f"minor {ix} does not end at step {r}")
    after = minor_value(field, stages[step_successor(r, shape)], ix)
    if ix.size == 1:
        rest = field.one
    else:
        rest = minor_value(field, stages[r], MinorIndex(ix.rows[:-1], ix.cols[:-1]))
    return after == field.mul(rest, stages[r][r])
