"""Grid shapes, Cauchon diagrams and the lexicographic step set.

Positions are 1-based ``(row, col)`` pairs. A diagram is stored as a bitmask
over row-major cells: cell ``(i, a)`` is bit ``(i - 1) * p + (a - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

GridPos = tuple[int, int]

DIAGRAM_CELL_BOUND = 20


class BoundError(ValueError):
    """Requested computation exceeds a configured desk-scale bound."""


@dataclass(frozen=True, order=True)
class GridShape:
    m: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1:
            raise ValueError(f"grid shape needs m, p >= 1, got {self.m}x{self.p}")

    @property
    def cells(self) -> int:
        return self.m * self.p

    def contains(self, pos: GridPos) -> bool:
        i, a = pos
        return 1 <= i <= self.m and 1 <= a <= self.p

    def bit(self, pos: GridPos) -> int:
        i, a = pos
        return (i - 1) * self.p + (a - 1)

    def positions(self) -> list[GridPos]:
        """All cells in lexicographic (row-major) order."""
        return [(i, a) for i in range(1, self.m + 1) for a in range(1, self.p + 1)]

    def __str__(self):
        return f"{self.m}x{self.p}"


@lru_cache(maxsize=None)
def _prefix_masks(m: int, p: int) -> tuple[tuple[int, int], ...]:
    # per cell: (mask of cells strictly left, mask of cells strictly above)
    out = []
    for i in range(1, m + 1):
        for a in range(1, p + 1):
            left = sum(1 << ((i - 1) * p + g - 1) for g in range(1, a))
            above = sum(1 << ((k - 1) * p + a - 1) for k in range(1, i))
            out.append((left, above))
    return tuple(out)


def _mask_is_cauchon(mask: int, m: int, p: int) -> bool:
    for bit, (left, above) in enumerate(_prefix_masks(m, p)):
        if mask >> bit & 1 and (mask & left) != left and (mask & above) != above:
            return False
    return True


@dataclass(frozen=True)
class CauchonDiagram:
    """An m x p grid with a set of black boxes satisfying the Cauchon condition.

    Build one with :meth:`from_black` (validates) or :meth:`from_mask`.
    """

    shape: GridShape
    mask: int

    @classmethod
    def from_black(cls, shape: GridShape, black: Iterable[GridPos]) -> "CauchonDiagram":
        black = [tuple(b) for b in black]
        if not is_valid_diagram(shape, black):
            raise ValueError(f"not a Cauchon diagram on {shape}: {sorted(black)}")
        return cls(shape, sum(1 << shape.bit(b) for b in set(black)))

    @classmethod
    def from_mask(cls, shape: GridShape, mask: int) -> "CauchonDiagram":
        if mask < 0 or mask >> shape.cells:
            raise ValueError(f"mask {mask} does not fit {shape}")
        if not _mask_is_cauchon(mask, shape.m, shape.p):
            raise ValueError(f"mask {mask} is not a Cauchon diagram on {shape}")
        return cls(shape, mask)

    @classmethod
    def all_white(cls, shape: GridShape) -> "CauchonDiagram":
        return cls(shape, 0)

    @classmethod
    def all_black(cls, shape: GridShape) -> "CauchonDiagram":
        return cls(shape, (1 << shape.cells) - 1)

    @property
    def black(self) -> list[GridPos]:
        return [pos for pos in self.shape.positions() if self.is_black(pos)]

    def is_black(self, pos: GridPos) -> bool:
        return bool(self.mask >> self.shape.bit(pos) & 1)

    def rows(self) -> list[str]:
        """Text rendering, ``#`` for black and ``.`` for white."""
        return [
            "".join("#" if self.is_black((i, a)) else "." for a in range(1, self.shape.p + 1))
            for i in range(1, self.shape.m + 1)
        ]


def is_valid_diagram(shape: GridShape, black: Iterable[GridPos]) -> bool:
    """True iff every black box has all boxes strictly left of it black, or
    all boxes strictly above it black."""
    cells = set()
    for pos in black:
        pos = tuple(pos)
        if not shape.contains(pos):
            raise ValueError(f"position {pos} lies outside the {shape} grid")
        cells.add(pos)
    for i, a in cells:
        left_ok = all((i, g) in cells for g in range(1, a))
        above_ok = all((k, a) in cells for k in range(1, i))
        if not (left_ok or above_ok):
            return False
    return True


def enumerate_diagrams(shape: GridShape, bound: int = DIAGRAM_CELL_BOUND) -> Iterator[CauchonDiagram]:
    """Yield every Cauchon diagram of ``shape`` once, by ascending bitmask."""
    if shape.cells > bound:
        raise BoundError(f"{shape} has {shape.cells} cells, bound is {bound}")
    for mask in _diagram_masks(shape.m, shape.p):
        yield CauchonDiagram(shape, mask)


@lru_cache(maxsize=16)
def _diagram_masks(m: int, p: int) -> tuple[int, ...]:
    # Row-major backtracking: when cell (i, a) is decided, everything to its
    # left and above is already fixed, so the condition is checked locally.
    prefix = _prefix_masks(m, p)
    n = m * p
    found = []

    def extend(bit: int, mask: int):
        if bit == n:
            found.append(mask)
            return
        extend(bit + 1, mask)
        left, above = prefix[bit]
        if (mask & left) == left or (mask & above) == above:
            extend(bit + 1, mask | 1 << bit)

    extend(0, 0)
    found.sort()
    return tuple(found)


def count_diagrams(shape: GridShape, bound: int = DIAGRAM_CELL_BOUND) -> int:
    if shape.cells > bound:
        raise BoundError(f"{shape} has {shape.cells} cells, bound is {bound}")
    return len(_diagram_masks(shape.m, shape.p))


def in_step_set(r: GridPos, shape: GridShape) -> bool:
    """Membership in E: all cells except (1, 1), plus the terminal (m, p+1)."""
    if r == (shape.m, shape.p + 1):
        return True
    return shape.contains(r) and r != (1, 1)


def step_successor(r: GridPos, shape: GridShape) -> GridPos:
    """Smallest element of E strictly above ``r`` in lexicographic order."""
    r = tuple(r)
    if not shape.contains(r) or r == (1, 1):
        raise ValueError(f"{r} is not a step of the {shape} grid")
    i, a = r
    if a < shape.p:
        return (i, a + 1)
    if i < shape.m:
        return (i + 1, 1)
    return (i, a + 1)


def steps(shape: GridShape) -> list[GridPos]:
    """The non-terminal steps E° in ascending lexicographic order."""
    return shape.positions()[1:]
