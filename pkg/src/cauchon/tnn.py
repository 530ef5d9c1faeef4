"""Totally nonnegative witnesses: restoration at positive rational weights."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from cauchon.fields import RationalField
from cauchon.grid import CauchonDiagram, GridPos
from cauchon.minors import MinorFamily, MinorIndex, enumerate_minors
from cauchon.restoration import run_restoration, submatrix_minor, trial_rng, vanishing_set

WEIGHT_BOUND = 10**6


class NegativeMinorError(AssertionError):
    """A realized matrix has a negative minor; never a valid outcome."""


@dataclass(frozen=True)
class TnnWitness:
    diagram: CauchonDiagram
    matrix: tuple[tuple[Fraction, ...], ...]
    minor_signs: Mapping[MinorIndex, str]

    @property
    def zero_set(self) -> MinorFamily:
        return MinorFamily(
            self.diagram.shape, frozenset(ix for ix, s in self.minor_signs.items() if s == "zero")
        )


def sample_weights(diagram: CauchonDiagram, rng: random.Random, bound: int = WEIGHT_BOUND) -> dict[GridPos, Fraction]:
    """Random a/b with a, b uniform in [1, bound] on every white box."""
    return {
        pos: Fraction(rng.randint(1, bound), rng.randint(1, bound))
        for pos in diagram.shape.positions()
        if not diagram.is_black(pos)
    }


def unit_weights(diagram: CauchonDiagram) -> dict[GridPos, Fraction]:
    return {pos: Fraction(1) for pos in diagram.shape.positions() if not diagram.is_black(pos)}


def realize_tnn(diagram: CauchonDiagram, weights: Mapping[GridPos, Fraction]) -> TnnWitness:
    field = RationalField()
    for pos, wt in weights.items():
        if not Fraction(wt) > 0:
            raise ValueError(f"weight at {pos} must be positive, got {wt}")
    mat = run_restoration(field, diagram, weights)
    rows = mat.rows()
    signs = {}
    for ix in enumerate_minors(diagram.shape):
        v = submatrix_minor(field, rows, ix)
        if v < 0:
            raise NegativeMinorError(f"minor {ix} = {v} < 0 for diagram {diagram.rows()}")
        signs[ix] = "zero" if v == 0 else "positive"
    return TnnWitness(diagram, mat.entries, signs)


@dataclass(frozen=True)
class CellWitness:
    witness: TnnWitness
    zero_sets: tuple[MinorFamily, ...]
    vanishing: MinorFamily
    consistent: bool


def cell_witness(
    diagram: CauchonDiagram,
    samples: int = 10,
    seed: int = 0,
    trials: int = 5,
    field=None,
    vanishing: Optional[MinorFamily] = None,
) -> CellWitness:
    """Realize ``samples`` witnesses at random positive weights and compare
    their zero sets with each other and with the oracle vanishing set.

    Returns the first witness; ``consistent`` is False on any disagreement.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if vanishing is None:
        vanishing = vanishing_set(diagram, trials, field, seed).vanishing
    witnesses = []
    for k in range(samples):
        rng = trial_rng(seed, "tnn", diagram.shape.m, diagram.shape.p, diagram.mask, k)
        witnesses.append(realize_tnn(diagram, sample_weights(diagram, rng)))
    zero_sets = tuple(w.zero_set for w in witnesses)
    consistent = all(z == vanishing for z in zero_sets)
    return CellWitness(witnesses[0], zero_sets, vanishing, consistent)
