"""Exact univariate polynomials with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients lowest degree first; trailing zeros are stripped."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """x - root."""
        return cls((-root, 1))

    @classmethod
    def from_factors(cls, factors: Iterable[tuple["IntPolynomial", int]]) -> "IntPolynomial":
        out = cls.constant(1)
        for f, e in factors:
            out = out * f**e
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        result, base = IntPolynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divide_linear(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        if self.degree < 1:
            return IntPolynomial(), self(root)
        c = self.coeffs
        q = [0] * (len(c) - 1)
        acc = c[-1]
        for i in range(len(c) - 2, -1, -1):
            q[i] = acc
            acc = c[i] + acc * root
        return IntPolynomial(q), acc

    def serialize(self) -> str:
        """Comma-separated decimal coefficients, lowest degree first."""
        return ",".join(str(c) for c in self.coeffs) or "0"

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return cls(int(t) for t in text.split(","))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def factored(self) -> str:
        """Human-readable factorization over the integers, e.g. ``(x^2 - 8x + 3)^2``."""
        import sympy

        if self.is_one():
            return "1"
        x = sympy.Symbol("x")
        expr = sum(sympy.Integer(c) * x**i for i, c in enumerate(self.coeffs))
        content, factors = sympy.factor_list(expr)
        parts = [] if content == 1 else [str(content)]
        for f, e in sorted(factors, key=lambda fe: (sympy.degree(fe[0], x), str(fe[0]))):
            poly = IntPolynomial(int(v) for v in reversed(sympy.Poly(f, x).all_coeffs()))
            parts.append(f"({poly})" + (f"^{e}" if e > 1 else ""))
        return "".join(parts)
