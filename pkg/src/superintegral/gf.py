"""Arithmetic in GF(p^k).

Field elements are the integers ``0 .. q-1``; the base-``p`` digits of an
element are the coefficients (lowest first) of its polynomial representative
modulo the field's defining polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic, coefficient lists lowest first
    a = a[:]
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return [c % p for c in a]


def _monic_polys(p: int, degree: int):
    # ordered by the integer whose base-p digits are the lower coefficients
    for code in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    degree = len(poly) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over GF(p).

    Candidates are ordered by the integer sum(c_i * p**i) of their non-leading
    coefficients, with c_{k-1} the most significant digit. Over GF(3) in
    degree 2 the scan order is x^2, x^2 + 1, x^2 + 2, x^2 + x, ...
    """
    if not is_prime(p):
        raise ValueError(f"GF(p^k) requires p prime, got p={p}")
    if k < 1:
        raise ValueError(f"GF(p^k) requires k >= 1, got k={k}")
    for poly in _monic_polys(p, k):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class GaloisField:
    """GF(q) with precomputed addition and multiplication tables."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"field order must be a prime power, got q={q}")
        self.q = q
        self.p, self.k = pk
        self.modulus = smallest_irreducible(self.p, self.k)
        p, k = self.p, self.k
        digits = [self._digits(x) for x in range(q)]
        self.add_table = np.zeros((q, q), dtype=np.int64)
        self.mul_table = np.zeros((q, q), dtype=np.int64)
        for x, y in product(range(q), repeat=2):
            dx, dy = digits[x], digits[y]
            self.add_table[x, y] = self._value([(a + b) % p for a, b in zip(dx, dy)])
            prod = [0] * (2 * k - 1)
            for i, a in enumerate(dx):
                for j, b in enumerate(dy):
                    prod[i + j] += a * b
            self.mul_table[x, y] = self._value(_poly_mod(prod, list(self.modulus), p))
        self.neg_table = np.array([int(np.flatnonzero(self.add_table[x] == 0)[0]) for x in range(q)])
        self.inv_table = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            self.inv_table[x] = int(np.flatnonzero(self.mul_table[x] == 1)[0])

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _value(self, coeffs: list[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q)")
        return int(self.inv_table[x])

    def frobenius(self, x: int) -> int:
        """x -> x**p."""
        r = 1
        for _ in range(self.p):
            r = self.mul(r, x)
        return r

    def __repr__(self) -> str:
        return f"GaloisField({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GaloisField:
    return GaloisField(q)
