"""Small finite fields GF(p^m) backed by full lookup tables.

Elements are plain ints in ``range(q)``.  For a prime field the index is the
residue itself.  For an extension the index of ``c_{m-1} x^{m-1} + ... + c_0``
is ``sum(c_i * p**i)``, so index order coincides with lexicographic order of
the coefficient tuple read high degree first.  Index 0 is zero and index 1 is
the unit in both cases.
"""

from __future__ import annotations

import string
from functools import lru_cache

from .errors import CapExceeded, NotPrimePower, ZeroInverse

FIELD_CAP = 256

_DIGITS = string.digits + string.ascii_lowercase


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has more than one prime divisor")
    return p, m


# Polynomials over GF(p) are coefficient lists, lowest degree first.

def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a degree, in lexicographic order of coefficients."""
    for tail in range(p ** degree):
        coeffs = [(tail // p ** i) % p for i in range(degree)]
        yield coeffs + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to half."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


class FiniteField:
    """GF(q) with precomputed add/mul/neg/inv tables.

    Build instances with :func:`field_new`; tables are tuples and never
    mutated after construction.
    """

    def __init__(self, q: int, cap: int = FIELD_CAP):
        if q < 2:
            raise NotPrimePower(f"{q} is not a prime power")
        if q > cap:
            raise CapExceeded("field", cap, q)
        p, m = prime_power(q)
        self.q, self.p, self.m = q, p, m
        self.modulus = smallest_irreducible(p, m) if m > 1 else [0, 1]

        digits = [self._digits(a) for a in range(q)]
        self.add_table = tuple(
            tuple(self._index([(x + y) % p for x, y in zip(da, db)]) for db in digits)
            for da in digits
        )
        if m == 1:
            mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
        else:
            mul = tuple(
                tuple(self._poly_mul(da, db) for db in digits) for da in digits
            )
        self.mul_table = mul
        self.neg_table = tuple(row.index(0) for row in self.add_table)
        self.inv_table = tuple([None] + [row.index(1) for row in mul[1:]])
        self.element_names = tuple(self._name(d) for d in digits)
        self._name_index = {name: i for i, name in enumerate(self.element_names)}

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    def _index(self, digits) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _poly_mul(self, a: list[int], b: list[int]) -> int:
        p = self.p
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self._index(_poly_mod(prod, self.modulus, p))

    def _name(self, digits: list[int]) -> str:
        if self.m == 1:
            return str(digits[0])
        return "".join(_DIGITS[d] for d in reversed(digits))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and self.q == other.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = self.mul_table[result][a]
        return result

    def name(self, a: int) -> str:
        return self.element_names[a]

    def parse(self, text: str) -> int:
        """Inverse of :meth:`name`."""
        try:
            return self._name_index[text.strip().lower()]
        except KeyError:
            raise ValueError(f"{text!r} is not an element of {self!r}") from None


@lru_cache(maxsize=None)
def field_new(q: int, cap: int = FIELD_CAP) -> FiniteField:
    """Return GF(q).  Cached: equal arguments give the same immutable object."""
    return FiniteField(q, cap)


def field_arith(f: FiniteField, op: str, a: int, b: int | None = None) -> int:
    if op == "add":
        return f.add(a, b)
    if op == "mul":
        return f.mul(a, b)
    if op == "neg":
        return f.neg(a)
    if op == "inv":
        return f.inv(a)
    raise ValueError(f"unknown field operation {op!r}")
