"""Vectors over GF(q), supports, bases and Gaussian elimination.

A vector is a tuple of field-element ints, coordinate 0 first.  A support is
an int bitmask with bit ``i`` set iff coordinate ``i`` is non-zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .errors import CapExceeded, NullVector, SingularBasis
from .ffield import FiniteField

EXPLICIT_CAP = 4096

Vector = tuple


def enumerate_vectors(f: FiniteField, n: int, cap: int = EXPLICIT_CAP) -> list[Vector]:
    """All q^n - 1 non-zero vectors in lexicographic order.

    The position of a vector in this list is its vertex id.
    """
    count = f.q ** n - 1
    if count > cap:
        raise CapExceeded("explicit", cap, count)
    it = itertools.product(range(f.q), repeat=n)
    next(it)  # the null vector
    return list(it)


def vertex_id(v: Vector, q: int) -> int:
    value = 0
    for c in v:
        value = value * q + c
    if value == 0:
        raise NullVector("the null vector is not a vertex")
    return value - 1


def vertex_from_id(i: int, q: int, n: int) -> Vector:
    value = i + 1
    coords = []
    for _ in range(n):
        value, c = divmod(value, q)
        coords.append(c)
    return tuple(reversed(coords))


def support(v: Vector) -> int:
    mask = 0
    for i, c in enumerate(v):
        if c:
            mask |= 1 << i
    if not mask:
        raise NullVector("the null vector has empty support")
    return mask


def mask_indices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def scale(f: FiniteField, c: int, v: Vector) -> Vector:
    return tuple(f.mul(c, x) for x in v)


def add(f: FiniteField, u: Vector, v: Vector) -> Vector:
    return tuple(f.add(x, y) for x, y in zip(u, v))


def combine(f: FiniteField, coeffs, rows) -> Vector:
    """sum(coeffs[i] * rows[i])."""
    n = len(rows[0])
    total = (0,) * n
    for c, row in zip(coeffs, rows):
        if c:
            total = add(f, total, scale(f, c, row))
    return total


def row_reduce(f: FiniteField, rows) -> list[list[int]]:
    """Reduced row echelon form; pivots are the first non-zero entry per column."""
    a = [list(r) for r in rows]
    if not a:
        return a
    width = len(a[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = f.inv(a[r][col])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return a


def rank(f: FiniteField, vectors) -> int:
    reduced = row_reduce(f, list(vectors))
    return sum(1 for row in reduced if any(row))


def _inverse(f: FiniteField, rows) -> tuple[Vector, ...]:
    n = len(rows)
    augmented = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    reduced = row_reduce(f, augmented)
    for i in range(n):
        if reduced[i][i] != 1:
            raise SingularBasis("basis matrix is not invertible")
    return tuple(tuple(row[n:]) for row in reduced)


@dataclass(frozen=True)
class Basis:
    """n basis vectors, each written in the canonical basis."""

    field: FiniteField
    rows: tuple[Vector, ...]
    inverse: tuple[Vector, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SingularBasis(f"expected a square matrix, got {n} rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inverse", _inverse(self.field, rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, f: FiniteField, n: int) -> "Basis":
        return cls(f, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def coords_in_basis(v: Vector, b: Basis) -> Vector:
    """Coordinates c with v == sum(c_i * b.rows[i])."""
    # c = v * B^{-1} with basis vectors as the rows of B
    return combine(b.field, v, b.inverse)


def expand_in_basis(c: Vector, b: Basis) -> Vector:
    return combine(b.field, c, b.rows)


def parse_basis(text: str, f: FiniteField, n: int) -> Basis:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != n:
        raise SingularBasis(f"basis file has {len(lines)} rows, expected {n}")
    rows = []
    for ln in lines:
        row = tuple(f.parse(tok) for tok in ln.split(","))
        if len(row) != n:
            raise SingularBasis(f"row {ln.strip()!r} has {len(row)} entries, expected {n}")
        rows.append(row)
    return Basis(f, tuple(rows))


def load_basis(path, f: FiniteField, n: int) -> Basis:
    return parse_basis(Path(path).read_text(), f, n)


def format_basis(b: Basis) -> str:
    return "".join(",".join(b.field.name(c) for c in row) + "\n" for row in b.rows)


class LCG:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64;
    each draw returns the top 31 bits of the new state.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    MOD = 1 << 64

    def __init__(self, seed: int = 0):
        self.state = seed % self.MOD

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) % self.MOD
        return self.state >> 33

    def below(self, bound: int) -> int:
        return self.next() % bound


def random_basis(f: FiniteField, n: int, rng: LCG) -> Basis:
    """Draw n x n matrices row-major from rng until one is invertible."""
    while True:
        rows = [tuple(rng.below(f.q) for _ in range(n)) for _ in range(n)]
        if rank(f, rows) == n:
            return Basis(f, tuple(rows))


def random_bases(f: FiniteField, n: int, count: int, seed: int = 0) -> list[Basis]:
    rng = LCG(seed)
    return [random_basis(f, n, rng) for _ in range(count)]
