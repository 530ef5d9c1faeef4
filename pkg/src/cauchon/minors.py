"""Minor indices, the componentwise order on index sets, and the family of
minors attached to a restricted permutation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from cauchon.grid import GridShape
from cauchon.perms import Permutation, in_restricted_set, longest_element


@dataclass(frozen=True, order=True)
class MinorIndex:
    """Rows I and columns Λ of a minor, both strictly ascending, same size."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs equal nonempty row/column sets, got {rows}|{cols}")
        if any(a >= b for a, b in zip(rows, rows[1:])) or any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError(f"minor indices must be strictly ascending: {rows}|{cols}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def fits(self, shape: GridShape) -> bool:
        return 1 <= self.rows[0] and self.rows[-1] <= shape.m and 1 <= self.cols[0] and self.cols[-1] <= shape.p

    def __str__(self):
        return "[" + "".join(map(str, self.rows)) + "|" + "".join(map(str, self.cols)) + "]"


@dataclass(frozen=True)
class MinorFamily:
    shape: GridShape
    members: frozenset[MinorIndex]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for ix in self.members:
            if not ix.fits(self.shape):
                raise ValueError(f"minor {ix} does not fit {self.shape}")

    def __contains__(self, ix: MinorIndex) -> bool:
        return ix in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> list[MinorIndex]:
        return sorted(self.members)


def indexset_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order on equal-size sets listed ascending."""
    if len(a) != len(b):
        raise ValueError(f"index sets differ in size: {list(a)} vs {list(b)}")
    return all(x <= y for x, y in zip(sorted(a), sorted(b)))


def enumerate_minors(shape: GridShape) -> Iterator[MinorIndex]:
    """Every nonempty minor, by size, then rows, then columns."""
    for k in range(1, min(shape.m, shape.p) + 1):
        for rows in combinations(range(1, shape.m + 1), k):
            for cols in combinations(range(1, shape.p + 1), k):
                yield MinorIndex(rows, cols)


class Conditions(NamedTuple):
    c1: bool
    c2: bool
    c3: bool
    c4: bool

    def any(self) -> bool:
        return self.c1 or self.c2 or self.c3 or self.c4


def family_conditions(w: Permutation, ix: MinorIndex, shape: GridShape) -> Conditions:
    """Evaluate the four membership conditions separately."""
    if not in_restricted_set(w, shape):
        raise ValueError(f"{w} is not in the restricted set for {shape}")
    if not ix.fits(shape):
        raise ValueError(f"minor {ix} does not fit {shape}")
    m, p = shape.m, shape.p
    n = m + p
    w0m, w0n = longest_element(m), longest_element(n)
    winv = w.inverse()
    rows, cols = ix.rows, ix.cols
    k = ix.size

    # C1: I is not below w0m w(L) for any admissible L
    pool = [x for x in range(1, p + 1) if w(x) <= m]
    c1 = not any(
        indexset_leq(ls, cols) and indexset_leq(rows, [w0m(w(x)) for x in ls])
        for ls in combinations(pool, k)
    )

    # C2: m + Λ is not below w w0N(L) for any admissible L
    shifted = [m + c for c in cols]
    pool = sorted(x for x in (w0n(winv(y)) for y in range(m + 1, n + 1)) if x <= m)
    c2 = not any(
        indexset_leq(ls, rows) and indexset_leq(shifted, [w(w0n(x)) for x in ls])
        for ls in combinations(pool, k)
    )

    col_set, row_set = set(cols), set(rows)
    c3 = any(
        len(col_set & set(range(r, s + 1)))
        > len(set(range(r, s + 1)) - {winv(y) for y in range(m + r, m + s + 1)})
        for r in range(1, p + 1)
        for s in range(r, p + 1)
    )
    c4 = any(
        len(row_set & set(range(r, s + 1)))
        > len({w0n(x) for x in range(r, s + 1)} - {winv(w0m(x)) for x in range(r, s + 1)})
        for r in range(1, m + 1)
        for s in range(r, m + 1)
    )
    return Conditions(c1, c2, c3, c4)


def minor_in_family(w: Permutation, ix: MinorIndex, shape: GridShape) -> bool:
    return family_conditions(w, ix, shape).any()


def minor_family(w: Permutation, shape: GridShape) -> MinorFamily:
    return MinorFamily(shape, frozenset(ix for ix in enumerate_minors(shape) if minor_in_family(w, ix, shape)))


def family_of(shape: GridShape, members: Iterable[MinorIndex]) -> MinorFamily:
    return MinorFamily(shape, frozenset(members))
