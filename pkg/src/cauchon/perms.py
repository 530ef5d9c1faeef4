"""Permutations of [1, N] in one-line notation, Bruhat order, the restricted
set S = {w : -p <= w(i) - i <= m} and the pipe-dream bijection with Cauchon
diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Iterator, Sequence

from cauchon.grid import (
    DIAGRAM_CELL_BOUND,
    BoundError,
    CauchonDiagram,
    GridShape,
    enumerate_diagrams,
)

RESTRICTED_SIZE_BOUND = 9


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of [1, n]; ``images[i - 1] == w(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of [1, {len(self.images)}]: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        _check_same_size(self, other)
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def image(self, subset) -> list[int]:
        """Sorted image of a set of points."""
        return sorted(self.images[i - 1] for i in subset)

    def length(self) -> int:
        """Number of inversions."""
        w = self.images
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _check_same_size(u: Permutation, v: Permutation):
    if u.n != v.n:
        raise ValueError(f"permutation sizes differ: {u.n} vs {v.n}")


def longest_element(r: int) -> Permutation:
    """The order-reversing permutation i -> r + 1 - i."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return Permutation(tuple(range(r, 0, -1)))


def block_longest(m: int, p: int) -> Permutation:
    """Reverse [1, p] and [p+1, p+m] separately."""
    if m < 1 or p < 1:
        raise ValueError(f"m, p must be positive, got {m}, {p}")
    return Permutation(tuple(range(p, 0, -1)) + tuple(range(p + m, p, -1)))


def bounding_permutation(shape: GridShape) -> Permutation:
    """[m+1, ..., m+p, 1, ..., m], the Bruhat-maximal element of S."""
    m, p = shape.m, shape.p
    return Permutation(tuple(range(m + 1, m + p + 1)) + tuple(range(1, m + 1)))


def _rank_table(w: Sequence[int]) -> list[list[int]]:
    # table[i][j] = #{k <= i : w(k) >= j}, i, j in [1, n]
    n = len(w)
    table = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        row, prev = table[i], table[i - 1]
        for j in range(1, n + 1):
            row[j] = prev[j] + (w[i - 1] >= j)
    return table


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat comparison by the rank-matrix (tableau) criterion."""
    _check_same_size(u, v)
    ru, rv = _rank_table(u.images), _rank_table(v.images)
    n = u.n
    return all(ru[i][j] <= rv[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


def in_restricted_set(w: Permutation, shape: GridShape) -> bool:
    if w.n != shape.m + shape.p:
        raise ValueError(f"permutation of size {w.n} does not match {shape} (N = {shape.m + shape.p})")
    return all(-shape.p <= x - i <= shape.m for i, x in enumerate(w.images, start=1))


def enumerate_restricted(shape: GridShape, bound: int = RESTRICTED_SIZE_BOUND) -> Iterator[Permutation]:
    """Yield each element of S once, in lexicographic order of one-line notation."""
    n = shape.m + shape.p
    if n > bound:
        raise BoundError(f"m + p = {n} exceeds bound {bound}")
    for images in _restricted_images(shape.m, shape.p):
        yield Permutation(images)


@lru_cache(maxsize=16)
def _restricted_images(m: int, p: int) -> tuple[tuple[int, ...], ...]:
    n = m + p
    used = [False] * (n + 1)
    prefix: list[int] = []
    out = []

    def extend(i: int):
        if i > n:
            out.append(tuple(prefix))
            return
        for x in range(max(1, i - p), min(n, i + m) + 1):
            if not used[x]:
                used[x] = True
                prefix.append(x)
                extend(i + 1)
                prefix.pop()
                used[x] = False

    extend(1)
    return tuple(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in _all_perms(range(1, n + 1)):
        yield Permutation(images)


# Pipe dreams. Black boxes are crossings, white boxes are elbows. Pipes run
# up and to the left, entering on the south-east boundary and leaving on the
# north-west one. Boundary edges are numbered along anti-diagonals: the
# bottom of column a is a, the right end of row i is m + p + 1 - i, the left
# end of row i is m + 1 - i, and the top of column a is m + a. A black box
# (i, a) therefore swaps the strands at positions m - i + a and m - i + a + 1.

_UP, _LEFT = 0, 1


def diagram_to_permutation(diagram: CauchonDiagram) -> Permutation:
    """w(y) is the exit label of the pipe that enters at boundary label y."""
    m, p = diagram.shape.m, diagram.shape.p
    images = []
    for label in range(1, m + p + 1):
        if label <= p:
            i, a, heading = m, label, _UP
        else:
            i, a, heading = m + p + 1 - label, p, _LEFT
        while True:
            if not diagram.is_black((i, a)):
                heading = _LEFT if heading == _UP else _UP
            if heading == _UP:
                if i == 1:
                    images.append(m + a)
                    break
                i -= 1
            else:
                if a == 1:
                    images.append(m + 1 - i)
                    break
                a -= 1
    return Permutation(tuple(images))


def simple_transposition(k: int, n: int) -> Permutation:
    images = list(range(1, n + 1))
    images[k - 1], images[k] = images[k], images[k - 1]
    return Permutation(tuple(images))


@lru_cache(maxsize=16)
def _pipe_dream_table(shape: GridShape, bound: int) -> dict[Permutation, CauchonDiagram]:
    table = {}
    for diagram in enumerate_diagrams(shape, bound):
        w = diagram_to_permutation(diagram)
        if w in table:
            raise AssertionError(f"pipe-dream map is not injective on {shape}: {w}")
        table[w] = diagram
    return table


def permutation_to_diagram(w: Permutation, shape: GridShape, bound: int = DIAGRAM_CELL_BOUND) -> CauchonDiagram:
    """Inverse of :func:`diagram_to_permutation` on the restricted set."""
    if not in_restricted_set(w, shape):
        raise ValueError(f"{w} is not in the restricted set for {shape}")
    try:
        return _pipe_dream_table(shape, bound)[w]
    except KeyError:
        raise AssertionError(f"{w} has no pipe-dream preimage on {shape}") from None
