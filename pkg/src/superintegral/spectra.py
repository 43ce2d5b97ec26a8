"""Exact characteristic polynomials and integer spectra of graph matrices.

All arithmetic is over Python integers. Characteristic polynomials are formed
per connected component (closed forms for complete components,
Faddeev-LeVerrier otherwise) and multiplied; integer eigenvalues are then
peeled off by synthetic division over a Gershgorin interval.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graphs import SimpleGraph, connected_components, is_complete
from .polynomials import IntPolynomial

MAX_GENERAL_COMPONENT = 64

Matrix = list[list[int]]


class ComponentTooLargeError(ValueError):
    """A non-complete component exceeds the exact char-poly size limit."""


class MatrixKind(enum.Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"


KINDS = (MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN)


def matrix_of(g: SimpleGraph, kind: MatrixKind) -> Matrix:
    n = g.vertex_count
    m = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    if kind is MatrixKind.ADJACENCY:
        return m
    sign = -1 if kind is MatrixKind.LAPLACIAN else 1
    for i in range(n):
        deg = sum(m[i])
        m[i] = [sign * v for v in m[i]]
        m[i][i] = deg
    return m


def char_poly(m: Matrix) -> IntPolynomial:
    """det(xI - M) by Faddeev-LeVerrier; every division is exact over Z."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk_cols = list(zip(*mk))
        nxt = [[sum(a * b for a, b in zip(row, col)) for col in mk_cols] for row in m]
        for i in range(n):
            nxt[i][i] += c_prev
        mk = nxt
        # tr(A M_k)
        tr = sum(sum(a * b for a, b in zip(m[i], (mk[r][i] for r in range(n)))) for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def bareiss_det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bareiss_rank(m: Matrix) -> int:
    """Rank by fraction-free elimination with row pivoting."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * p - a[i][c] * a[rank][j]) // prev
            a[i][c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class SpectrumOutcome:
    """Integer eigenvalues (value, multiplicity), descending, and the leftover factor."""

    integer_eigenvalues: tuple[tuple[int, int], ...]
    residual: IntPolynomial

    @property
    def is_integral(self) -> bool:
        return self.residual.is_one()

    def as_dict(self) -> dict[int, int]:
        return dict(self.integer_eigenvalues)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.integer_eigenvalues) + self.residual.degree

    def serialize(self) -> str:
        text = format_multiset(self.integer_eigenvalues)
        if not self.is_integral:
            text += f"; residual={self.residual.serialize()}"
        return text


def format_multiset(terms: Sequence[tuple[int, int]] | dict[int, int]) -> str:
    """``value^mult`` terms by descending value, e.g. ``4^9, 0^3``."""
    items = terms.items() if isinstance(terms, dict) else terms
    return ", ".join(f"{v}^{m}" for v, m in sorted(items, reverse=True))


def extract_integer_spectrum(p: IntPolynomial, lo: int, hi: int) -> SpectrumOutcome:
    """Peel every integer root in [lo, hi] off a monic polynomial."""
    if not p.is_monic():
        raise ValueError("characteristic polynomial must be monic")
    found = []
    for v in range(hi, lo - 1, -1):
        mult = 0
        while p.degree >= 1:
            q, r = p.divide_linear(v)
            if r:
                break
            p, mult = q, mult + 1
        if mult:
            found.append((v, mult))
    return SpectrumOutcome(tuple(found), p)


def complete_char_poly(s: int, kind: MatrixKind) -> IntPolynomial:
    x = IntPolynomial.linear
    if kind is MatrixKind.ADJACENCY:
        return x(s - 1) * x(-1) ** (s - 1)
    if kind is MatrixKind.LAPLACIAN:
        return x(0) * x(s) ** (s - 1)
    return x(2 * s - 2) * x(s - 2) ** (s - 1)


def component_char_poly(g: SimpleGraph, vertices: Sequence[int], kind: MatrixKind) -> IntPolynomial:
    if is_complete(g, vertices):
        return complete_char_poly(len(vertices), kind)
    if len(vertices) > MAX_GENERAL_COMPONENT:
        raise ComponentTooLargeError(
            f"non-complete component with {len(vertices)} vertices exceeds the exact limit "
            f"of {MAX_GENERAL_COMPONENT}; not computed"
        )
    return char_poly(matrix_of(g.induced(vertices), kind))


def eigenvalue_bounds(g: SimpleGraph, kind: MatrixKind) -> tuple[int, int]:
    dmax = max(g.degrees(), default=0)
    if kind is MatrixKind.ADJACENCY:
        return -dmax, dmax
    return 0, 2 * dmax


def graph_char_poly(g: SimpleGraph, kind: MatrixKind) -> IntPolynomial:
    poly = IntPolynomial.constant(1)
    cache: dict[int, IntPolynomial] = {}
    for comp in connected_components(g):
        if is_complete(g, comp):
            s = len(comp)
            if s not in cache:
                cache[s] = complete_char_poly(s, kind)
            poly = poly * cache[s]
        else:
            poly = poly * component_char_poly(g, comp, kind)
    return poly


def spectrum(g: SimpleGraph, kind: MatrixKind, verify: bool = False) -> SpectrumOutcome:
    """Integer part of the spectrum of A, L or Q plus the residual factor.

    With ``verify`` every multiplicity is re-derived as n - rank(M - vI) per
    component by exact elimination and compared.
    """
    lo, hi = eigenvalue_bounds(g, kind)
    outcome = extract_integer_spectrum(graph_char_poly(g, kind), lo, hi)
    if verify:
        check_multiplicities(g, kind, outcome)
    return outcome


def rank_multiplicity(m: Matrix, v: int) -> int:
    shifted = [[x - (v if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(m)]
    return len(m) - bareiss_rank(shifted)


def check_multiplicities(g: SimpleGraph, kind: MatrixKind, outcome: SpectrumOutcome) -> None:
    comps = connected_components(g)
    if any(len(c) > MAX_GENERAL_COMPONENT for c in comps):
        raise ComponentTooLargeError("rank cross-check limited to components of at most 64 vertices")
    mats = [matrix_of(g.induced(c), kind) for c in comps]
    for v, mult in outcome.integer_eigenvalues:
        by_rank = sum(rank_multiplicity(m, v) for m in mats)
        if by_rank != mult:
            raise ArithmeticError(f"eigenvalue {v}: synthetic division gives {mult}, rank gives {by_rank}")


class IntegralityFlags(NamedTuple):
    integral: bool
    l_integral: bool
    q_integral: bool
    super_integral: bool


def integrality_flags(g: SimpleGraph, spectra: dict[MatrixKind, SpectrumOutcome] | None = None) -> IntegralityFlags:
    spectra = spectra or {k: spectrum(g, k) for k in KINDS}
    a, l, q = (spectra[k].is_integral for k in KINDS)
    return IntegralityFlags(a, l, q, a and l and q)
