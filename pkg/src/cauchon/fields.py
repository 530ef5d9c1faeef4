"""Exact fields used by the oracles: a 61-bit prime field and the rationals."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Sequence

MERSENNE_61 = (1 << 61) - 1


class PrimeField:
    """Integers modulo a prime; elements are plain ints in [0, q)."""

    def __init__(self, q: int = MERSENNE_61):
        self.q = q

    zero = 0
    one = 1

    def __call__(self, x) -> int:
        return int(x) % self.q

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return a * b % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, -1, self.q)

    def div(self, a, b):
        return a * self.inv(b) % self.q

    def neg(self, a):
        return -a % self.q

    def is_zero(self, a) -> bool:
        return a % self.q == 0

    def sample_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.q)

    def describe(self) -> str:
        return f"prime:{self.q}"

    def encode(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("prime", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class RationalField:
    """Exact rationals backed by :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, bound: int = 10**6):
        # numerators and denominators of sampled values lie in [1, bound]
        self.bound = bound

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero rational")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero rational")
        return Fraction(a) / b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    def sample_nonzero(self, rng: random.Random) -> Fraction:
        return self.sample_positive(rng)

    def sample_positive(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(1, self.bound), rng.randint(1, self.bound))

    def describe(self) -> str:
        return "rational"

    def encode(self, a) -> str:
        a = Fraction(a)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField) and other.bound == self.bound

    def __hash__(self):
        return hash(("rational", self.bound))

    def __repr__(self):
        return "RationalField()"


def parse_field(spec: str):
    """``"prime"``, ``"prime:<q>"`` or ``"rational"``."""
    if spec == "rational":
        return RationalField()
    if spec == "prime":
        return PrimeField()
    if spec.startswith("prime:"):
        return PrimeField(int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown field {spec!r}; use 'prime', 'prime:<q>' or 'rational'")


def determinant(field, rows: Sequence[Sequence[Any]]):
    """Determinant of a square matrix by Gaussian elimination over ``field``."""
    a = [list(r) for r in rows]
    n = len(a)
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not field.is_zero(a[r][c])), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.neg(det)
        det = field.mul(det, a[c][c])
        inv = field.inv(a[c][c])
        for r in range(c + 1, n):
            if field.is_zero(a[r][c]):
                continue
            f = field.mul(a[r][c], inv)
            a[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[r], a[c])]
    return det
